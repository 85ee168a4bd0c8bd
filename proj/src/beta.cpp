#include "ncm/beta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncm {

namespace {

long cycle_count(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    long cycles = 0;
    for (size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        size_t t = start;
        while (!seen[t]) {
            seen[t] = true;
            t = static_cast<size_t>(perm[t]);
        }
    }
    return cycles;
}

Rational power(long base, long exp) {
    Rational r(1);
    for (long t = 0; t < exp; ++t) r *= base;
    return r;
}

void types_up_to(int m, int budget, std::vector<int>& acc, std::vector<TypeVector>& out) {
    if (static_cast<int>(acc.size()) == m) {
        out.push_back(acc);
        return;
    }
    for (int k = 0; k <= budget; ++k) {
        acc.push_back(k);
        types_up_to(m, budget - k, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::pair<Word, long>> beta_words(const TypeVector& k, Guard guard) {
    std::vector<int> rows = expand_content(k);
    const size_t n = rows.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Word, long>> out;
    do {
        guard.count();
        std::vector<Letter> letters(n);
        for (size_t t = 0; t < n; ++t)
            letters[t] = {rows[t], rows[static_cast<size_t>(perm[t])]};
        out.emplace_back(Word(std::move(letters)), cycle_count(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Series fz_sum(int m, int max_degree, int beta, Guard guard) {
    if (beta < 1) throw std::invalid_argument("beta must be a positive integer");
    Series out(max_degree);
    std::vector<TypeVector> types;
    {
        std::vector<int> acc;
        types_up_to(m, max_degree, acc, types);
    }
    for (const TypeVector& k : types) {
        Rational factorials(1);
        for (int ki : k)
            for (int t = 2; t <= ki; ++t) factorials *= t;
        for (const auto& [word, cycles] : beta_words(k, guard))
            out.add_term(word, Coefficient(power(beta, cycles) / factorials));
    }
    return out;
}

Series beta_series(int m, int max_degree, int beta, Guard guard) {
    SymbolicMatrix a = SymbolicMatrix::letters(m, max_degree);
    Series fermion = determinant(a.identity_minus(), DetFlavor::Plain);
    Series fermion_power = Series::one(max_degree);
    for (int t = 0; t < beta; ++t) fermion_power = fermion_power * fermion;
    return fermion_power * fz_sum(m, max_degree, beta, guard) - Series::one(max_degree);
}

long count_beta_preimages(const Word& w, int m, int beta) {
    if (beta < 1) throw std::invalid_argument("beta must be a positive integer");
    std::vector<int> rows = w.row_word();
    if (!std::is_sorted(rows.begin(), rows.end()))
        throw std::invalid_argument("the word must have sorted starting heights");
    // consecutive row blocks
    std::vector<std::pair<size_t, size_t>> blocks;  // [from, to)
    for (size_t t = 0; t < rows.size();) {
        size_t u = t;
        while (u < rows.size() && rows[u] == rows[t]) ++u;
        blocks.emplace_back(t, u);
        t = u;
    }
    // choose a composition of every block into beta consecutive piece sizes
    std::vector<std::vector<int>> cuts(blocks.size(), std::vector<int>(static_cast<size_t>(beta)));
    long count = 0;
    auto pieces_balanced = [&]() {
        for (int s = 0; s < beta; ++s) {
            std::vector<Letter> piece;
            for (size_t b = 0; b < blocks.size(); ++b) {
                size_t from = blocks[b].first;
                for (int u = 0; u < s; ++u)
                    from += static_cast<size_t>(cuts[b][static_cast<size_t>(u)]);
                for (int u = 0; u < cuts[b][static_cast<size_t>(s)]; ++u)
                    piece.push_back(w[from + static_cast<size_t>(u)]);
            }
            if (!piece.empty() && !Word(piece).balanced(m)) return false;
        }
        return true;
    };
    auto descend = [&](auto&& self, size_t b, int piece, int left) -> void {
        if (b == blocks.size()) {
            if (pieces_balanced()) ++count;
            return;
        }
        int block_size = static_cast<int>(blocks[b].second - blocks[b].first);
        if (piece == 0) left = block_size;
        if (piece + 1 == beta) {
            cuts[b][static_cast<size_t>(piece)] = left;
            self(self, b + 1, 0, 0);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            cuts[b][static_cast<size_t>(piece)] = take;
            self(self, b, piece + 1, left - take);
        }
    };
    descend(descend, 0, 0, 0);
    return count;
}

VerificationReport verify_fz_commutative(int m, int max_degree, int beta,
                                         MembershipOptions opts) {
    MatrixClass cls = MatrixClass::commutative();
    VerificationReport report;
    report.check = "beta";
    report.matrix_class = cls.name();
    report.m = m;
    report.truncation = max_degree;
    report.q_points = opts.q_points;
    report.symbolic = opts.symbolic;
    report.info["beta"] = std::to_string(beta);

    Series s = beta_series(m, max_degree, beta, opts.guard);
    Series collapsed = normal_form(s, cls);
    CheckRecord rec;
    rec.name = "commutative collapse of det(I-A)^beta * fz - 1";
    rec.pass = collapsed.is_zero();
    rec.detail = rec.pass ? "commutative collapse is exactly zero"
                          : "commutative collapse keeps " +
                                std::to_string(collapsed.term_count()) + " terms";
    report.add(std::move(rec));
    return report;
}

VerificationReport verify_beta_noncommutative(int m, int max_degree, int beta,
                                              MembershipOptions opts) {
    MatrixClass cls = MatrixClass::right_quantum();
    VerificationReport report;
    report.check = "beta";
    report.matrix_class = cls.name();
    report.m = m;
    report.truncation = max_degree;
    report.q_points = opts.q_points;
    report.symbolic = opts.symbolic;
    report.info["beta"] = std::to_string(beta);

    Series s = beta_series(m, max_degree, beta, opts.guard);
    MembershipResult mem = ideal_membership(s, cls, m, opts);
    CheckRecord rec;
    rec.name = "det(I-A)^beta * fz - 1 in relation ideal";
    rec.pass = mem.member;
    rec.components = std::move(mem.components);
    for (const ComponentVerdict& v : rec.components) rec.elapsed_ms += v.elapsed_ms;
    report.add(std::move(rec));
    return report;
}

}  // namespace ncm
