#include "ncm/determinants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncm {

DetFlavor det_flavor(const MatrixClass& cls) {
    switch (cls.kind()) {
        case MatrixClass::Kind::Commutative:
        case MatrixClass::Kind::CartierFoata:
        case MatrixClass::Kind::RightQuantum:
            return DetFlavor::Plain;
        case MatrixClass::Kind::QCartierFoata:
        case MatrixClass::Kind::QRightQuantum:
            return DetFlavor::Quantum;
        case MatrixClass::Kind::QijCartierFoata:
        case MatrixClass::Kind::QijRightQuantum:
            return DetFlavor::Qij;
        case MatrixClass::Kind::Super:
            return DetFlavor::Super;
    }
    throw std::logic_error("unhandled matrix class");
}

SymbolicMatrix SymbolicMatrix::letters(int m, int max_degree) {
    if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
    SymbolicMatrix out;
    out.max_degree = max_degree;
    out.row_labels.resize(static_cast<size_t>(m));
    out.col_labels.resize(static_cast<size_t>(m));
    std::iota(out.row_labels.begin(), out.row_labels.end(), 1);
    std::iota(out.col_labels.begin(), out.col_labels.end(), 1);
    out.entries.assign(static_cast<size_t>(m),
                       std::vector<Series>(static_cast<size_t>(m), Series(max_degree)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            out.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                Series::term(Word(std::vector<Letter>{{i, j}}), Coefficient(1), max_degree);
    return out;
}

SymbolicMatrix SymbolicMatrix::identity_minus() const {
    if (row_labels != col_labels)
        throw std::invalid_argument("identity_minus needs matching row/column labels");
    SymbolicMatrix out = *this;
    for (size_t r = 0; r < size(); ++r)
        for (size_t c = 0; c < size(); ++c) {
            Series e = Series(max_degree) - entries[r][c];
            if (r == c) e += Series::one(max_degree);
            out.entries[r][c] = std::move(e);
        }
    return out;
}

SymbolicMatrix SymbolicMatrix::minor_at(size_t row_pos, size_t col_pos) const {
    if (row_pos >= size() || col_pos >= col_labels.size())
        throw std::invalid_argument("minor position out of range");
    SymbolicMatrix out;
    out.max_degree = max_degree;
    for (size_t r = 0; r < size(); ++r)
        if (r != row_pos) out.row_labels.push_back(row_labels[r]);
    for (size_t c = 0; c < col_labels.size(); ++c)
        if (c != col_pos) out.col_labels.push_back(col_labels[c]);
    for (size_t r = 0; r < size(); ++r) {
        if (r == row_pos) continue;
        std::vector<Series> row;
        for (size_t c = 0; c < col_labels.size(); ++c)
            if (c != col_pos) row.push_back(entries[r][c]);
        out.entries.push_back(std::move(row));
    }
    return out;
}

SymbolicMatrix SymbolicMatrix::with_columns_swapped(size_t c1, size_t c2) const {
    if (c1 >= col_labels.size() || c2 >= col_labels.size())
        throw std::invalid_argument("column position out of range");
    SymbolicMatrix out = *this;
    std::swap(out.col_labels[c1], out.col_labels[c2]);
    for (size_t r = 0; r < size(); ++r) std::swap(out.entries[r][c1], out.entries[r][c2]);
    return out;
}

SymbolicMatrix SymbolicMatrix::with_column_replaced(size_t target, size_t source) const {
    if (target >= col_labels.size() || source >= col_labels.size())
        throw std::invalid_argument("column position out of range");
    SymbolicMatrix out = *this;
    out.col_labels[target] = col_labels[source];
    for (size_t r = 0; r < size(); ++r) out.entries[r][target] = entries[r][source];
    return out;
}

namespace {

// symbol attached to an index pair i < j, raised to exp in {+1, -1}
Coefficient flavor_symbol(DetFlavor flavor, int i, int j, const std::vector<int>& gamma,
                          int exp) {
    switch (flavor) {
        case DetFlavor::Plain:
            return Coefficient(1);
        case DetFlavor::Quantum:
            return Coefficient::monomial(Param::q(), exp);
        case DetFlavor::Qij:
            return Coefficient::monomial(Param::qij(i, j), exp);
        case DetFlavor::Super: {
            if (j > static_cast<int>(gamma.size()))
                throw std::invalid_argument("label beyond the parity vector");
            bool odd = gamma[static_cast<size_t>(i - 1)] == 1 &&
                       gamma[static_cast<size_t>(j - 1)] == 1;
            return Coefficient(Rational(odd ? -1 : 1));
        }
    }
    throw std::logic_error("unhandled determinant flavor");
}

// The q-weight of a Leibniz monomial depends on the monomial's own letters:
// straight symbols over column inversions, inverse symbols over row inversions.
// Identity factors contribute no letters and hence no weight, which is why the
// weight cannot be read off the permutation alone: a fixed point sitting
// between two moved points would inflate the permutation's inversion count.
Coefficient word_weight(const Word& w, DetFlavor flavor, const std::vector<int>& gamma) {
    const auto& ls = w.letters();
    Coefficient out(1);
    for (size_t s = 0; s < ls.size(); ++s)
        for (size_t t = s + 1; t < ls.size(); ++t) {
            if (ls[s].col > ls[t].col)
                out *= flavor_symbol(flavor, ls[t].col, ls[s].col, gamma, 1);
            if (ls[s].row > ls[t].row)
                out *= flavor_symbol(flavor, ls[t].row, ls[s].row, gamma, -1);
        }
    return out;
}

}  // namespace

Series determinant(const SymbolicMatrix& b, DetFlavor flavor, const std::vector<int>& gamma) {
    const size_t n = b.size();
    if (b.col_labels.size() != n)
        throw std::invalid_argument("determinant needs a square matrix");
    if (flavor == DetFlavor::Super && gamma.empty())
        throw std::invalid_argument("super determinant needs a parity vector");
    Series out(b.max_degree);
    if (n == 0) {
        out += Series::one(b.max_degree);
        return out;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Series prod = Series::one(b.max_degree);
        for (size_t c = 0; c < n; ++c)
            prod = prod * b.entries[static_cast<size_t>(perm[c])][c];
        Coefficient sign(Rational(inversion_pairs(perm).size() % 2 ? -1 : 1));
        if (flavor == DetFlavor::Plain) {
            out += prod.scaled(sign);
        } else {
            for (const auto& [w, c] : prod.terms())
                out.add_term(w, c * sign * word_weight(w, flavor, gamma));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SymbolicMatrix scaled_letters(int m, int max_degree, const MatrixClass& cls) {
    if (cls.kind() == MatrixClass::Kind::Super)
        throw std::invalid_argument("no scaled entry matrix for the super class");
    SymbolicMatrix out = SymbolicMatrix::letters(m, max_degree);
    for (int i = 2; i <= m; ++i) {
        Coefficient factor = cls.q_symbol(1, i);
        if (factor.is_constant()) continue;  // plain classes stay unscaled
        for (int j = 1; j <= m; ++j) {
            auto& e = out.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            e = e.scaled(factor);
        }
    }
    return out;
}

std::vector<DetLemmaCase> verify_det_lemmas(const MatrixClass& cls, int m,
                                            MembershipOptions opts) {
    if (det_flavor(cls) != DetFlavor::Plain)
        throw std::invalid_argument(
            "determinant row/column lemmas are checked for plain-sign classes only");
    std::vector<DetLemmaCase> out;
    SymbolicMatrix a = SymbolicMatrix::letters(m, m);
    const std::vector<std::pair<std::string, SymbolicMatrix>> bases = {
        {"A", a}, {"I-A", a.identity_minus()}};
    for (const auto& [label, b] : bases) {
        Series det_b = determinant(b, DetFlavor::Plain);
        for (size_t c = 0; c + 1 < b.size(); ++c) {
            DetLemmaCase item;
            item.name = "swap(" + label + ", cols " + std::to_string(c + 1) + "," +
                        std::to_string(c + 2) + ")";
            Series s = determinant(b.with_columns_swapped(c, c + 1), DetFlavor::Plain) + det_b;
            item.membership = ideal_membership(s, cls, m, opts);
            item.pass = item.membership.member;
            out.push_back(std::move(item));
        }
        for (size_t c1 = 0; c1 < b.size(); ++c1)
            for (size_t c2 = c1 + 1; c2 < b.size(); ++c2) {
                DetLemmaCase item;
                item.name = "equal(" + label + ", cols " + std::to_string(c1 + 1) + "," +
                            std::to_string(c2 + 1) + ")";
                Series s = determinant(b.with_column_replaced(c2, c1), DetFlavor::Plain);
                item.membership = ideal_membership(s, cls, m, opts);
                item.pass = item.membership.member;
                out.push_back(std::move(item));
            }
        {
            DetLemmaCase item;
            item.name = "laplace(" + label + ", last column)";
            Series s = det_b;
            const size_t last = b.size() - 1;
            for (size_t r = 0; r < b.size(); ++r) {
                Series piece =
                    determinant(b.minor_at(r, last), DetFlavor::Plain) * b.entries[r][last];
                int sign = (static_cast<int>(b.size() + r) + 1) % 2 ? -1 : 1;
                s -= piece.scaled(Coefficient(Rational(sign)));
            }
            item.membership = ideal_membership(s, cls, m, opts);
            item.pass = item.membership.member;
            out.push_back(std::move(item));
        }
    }
    return out;
}

}  // namespace ncm
