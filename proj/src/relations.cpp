#include "ncm/relations.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "ncm/linalg.hpp"

namespace ncm {

namespace {

Word pair_word(Letter first, Letter second) {
    return Word(std::vector<Letter>{first, second});
}

Relator make_relator(const std::vector<std::pair<Word, Coefficient>>& terms, int m) {
    if (terms.empty()) throw std::logic_error("relator without terms");
    Series element(2);
    Bigrading grading = bigrading_of(terms.front().first, m);
    for (const auto& [w, c] : terms) {
        if (bigrading_of(w, m) != grading)
            throw std::logic_error("relator terms do not share a bigrading");
        element.add_term(w, c);
    }
    return Relator{std::move(element), std::move(grading)};
}

Coefficient q_pow(int e) { return Coefficient::monomial(Param::q(), e); }

Coefficient qij(int i, int j) { return Coefficient::monomial(Param::qij(i, j), 1); }

}  // namespace

std::vector<Relator> relation_generators(const MatrixClass& cls, int m) {
    if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
    if (cls.kind() == MatrixClass::Kind::Super &&
        static_cast<int>(cls.gamma().size()) != m)
        throw std::invalid_argument("parity vector length must equal the matrix size");

    auto A = [](int r, int c) { return Letter{r, c}; };
    const Coefficient one(1);
    std::vector<Relator> out;

    switch (cls.kind()) {
        case MatrixClass::Kind::Commutative:
            for (int i = 1; i <= m; ++i)
                for (int k = 1; k <= m; ++k)
                    for (int l = k + 1; l <= m; ++l)
                        out.push_back(make_relator(
                            {{pair_word(A(i, l), A(i, k)), one},
                             {pair_word(A(i, k), A(i, l)), -one}},
                            m));
            [[fallthrough]];
        case MatrixClass::Kind::CartierFoata:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int k = 1; k <= m; ++k)
                        for (int l = 1; l <= m; ++l)
                            out.push_back(make_relator(
                                {{pair_word(A(j, l), A(i, k)), one},
                                 {pair_word(A(i, k), A(j, l)), -one}},
                                m));
            break;

        case MatrixClass::Kind::RightQuantum:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    for (int k = 1; k <= m; ++k)
                        out.push_back(make_relator(
                            {{pair_word(A(j, k), A(i, k)), one},
                             {pair_word(A(i, k), A(j, k)), -one}},
                            m));
                    for (int k = 1; k <= m; ++k)
                        for (int l = k + 1; l <= m; ++l)
                            out.push_back(make_relator(
                                {{pair_word(A(i, k), A(j, l)), one},
                                 {pair_word(A(j, k), A(i, l)), -one},
                                 {pair_word(A(j, l), A(i, k)), -one},
                                 {pair_word(A(i, l), A(j, k)), one}},
                                m));
                }
            break;

        case MatrixClass::Kind::QCartierFoata:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int k = 1; k <= m; ++k)
                        for (int l = 1; l <= m; ++l) {
                            Coefficient w = k == l ? q_pow(1) : k < l ? one : q_pow(2);
                            out.push_back(make_relator(
                                {{pair_word(A(j, l), A(i, k)), one},
                                 {pair_word(A(i, k), A(j, l)), -w}},
                                m));
                        }
            break;

        case MatrixClass::Kind::QRightQuantum:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    for (int k = 1; k <= m; ++k)
                        out.push_back(make_relator(
                            {{pair_word(A(j, k), A(i, k)), one},
                             {pair_word(A(i, k), A(j, k)), -q_pow(1)}},
                            m));
                    for (int k = 1; k <= m; ++k)
                        for (int l = k + 1; l <= m; ++l)
                            out.push_back(make_relator(
                                {{pair_word(A(i, k), A(j, l)), one},
                                 {pair_word(A(j, k), A(i, l)), -q_pow(-1)},
                                 {pair_word(A(j, l), A(i, k)), -one},
                                 {pair_word(A(i, l), A(j, k)), q_pow(1)}},
                                m));
                }
            break;

        case MatrixClass::Kind::QijCartierFoata:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int k = 1; k <= m; ++k)
                        for (int l = 1; l <= m; ++l) {
                            if (k < l)
                                out.push_back(make_relator(
                                    {{pair_word(A(j, l), A(i, k)), qij(k, l)},
                                     {pair_word(A(i, k), A(j, l)), -qij(i, j)}},
                                    m));
                            else if (k > l)
                                out.push_back(make_relator(
                                    {{pair_word(A(j, l), A(i, k)), one},
                                     {pair_word(A(i, k), A(j, l)), -(qij(i, j) * qij(l, k))}},
                                    m));
                            else
                                out.push_back(make_relator(
                                    {{pair_word(A(j, k), A(i, k)), one},
                                     {pair_word(A(i, k), A(j, k)), -qij(i, j)}},
                                    m));
                        }
            break;

        case MatrixClass::Kind::QijRightQuantum:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    for (int k = 1; k <= m; ++k)
                        out.push_back(make_relator(
                            {{pair_word(A(j, k), A(i, k)), one},
                             {pair_word(A(i, k), A(j, k)), -qij(i, j)}},
                            m));
                    for (int k = 1; k <= m; ++k)
                        for (int l = k + 1; l <= m; ++l)
                            out.push_back(make_relator(
                                {{pair_word(A(j, k), A(i, l)), one},
                                 {pair_word(A(i, k), A(j, l)), -qij(i, j)},
                                 {pair_word(A(j, l), A(i, k)), qij(k, l)},
                                 {pair_word(A(i, l), A(j, k)), -(qij(k, l) * qij(i, j))}},
                                m));
                }
            break;

        case MatrixClass::Kind::Super: {
            const std::vector<int>& gamma = cls.gamma();
            auto sign = [&](int e) { return Coefficient(Rational(e % 2 ? -1 : 1)); };
            auto g = [&](int h) { return gamma[static_cast<size_t>(h - 1)]; };
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int k = 1; k <= m; ++k)
                        for (int l = 1; l <= m; ++l) {
                            int e = g(i) * g(j) + (k == l ? 0 : g(k) * g(l));
                            out.push_back(make_relator(
                                {{pair_word(A(i, k), A(j, l)), one},
                                 {pair_word(A(j, l), A(i, k)), -sign(e)}},
                                m));
                        }
            break;
        }
    }
    return out;
}

std::pair<Coefficient, Word> monomial_normal_form(const Word& w, const MatrixClass& cls) {
    if (!cls.monomial_rewrite())
        throw std::invalid_argument("class " + cls.name() + " has no monomial normal form");
    std::vector<Letter> letters = w.letters();
    const bool by_column_too = cls.kind() == MatrixClass::Kind::Commutative;
    auto out_of_order = [&](const Letter& left, const Letter& right) {
        if (left.row != right.row) return left.row > right.row;
        return by_column_too && left.col > right.col;
    };
    Coefficient weight(1);
    // bubble sort: each adjacent exchange contributes its weight, and equal
    // starting heights are never exchanged, so the sort is stable
    for (size_t end = letters.size(); end > 1; --end)
        for (size_t t = 0; t + 1 < end; ++t)
            if (out_of_order(letters[t], letters[t + 1])) {
                weight *= cls.exchange_weight(letters[t], letters[t + 1]);
                std::swap(letters[t], letters[t + 1]);
            }
    return {std::move(weight), Word(std::move(letters))};
}

Series normal_form(const Series& s, const MatrixClass& cls) {
    Series out(s.max_degree());
    for (const auto& [w, c] : s.terms()) {
        auto [weight, sorted] = monomial_normal_form(w, cls);
        out.add_term(sorted, c * weight);
    }
    return out;
}

namespace {

long component_dimension(const Bigrading& g, long limit) {
    auto arrangements = [](const std::vector<int>& content) {
        mpz_class r(1);
        unsigned long rem = 0;
        for (int k : content) rem += static_cast<unsigned long>(k);
        for (int k : content) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), rem, static_cast<unsigned long>(k));
            r *= b;
            rem -= static_cast<unsigned long>(k);
        }
        return r;
    };
    mpz_class total = arrangements(g.rows) * arrangements(g.cols);
    if (!total.fits_slong_p() || total.get_si() > limit)
        throw guard_error("component " + g.str() + " has " + total.get_str() +
                          " basis words, above the per-component limit " +
                          std::to_string(limit));
    return total.get_si();
}

// one spanning element u * g * v of the ideal, restricted to a bigraded slice
struct SymRow {
    std::map<Word, Coefficient> terms;
};

void bounded_words_dfs(int len, int m, std::vector<int>& rbud, std::vector<int>& cbud,
                       std::vector<Letter>& acc, std::vector<Word>& out, Guard& guard) {
    if (len == 0) {
        guard.count();
        out.push_back(Word(acc));
        return;
    }
    for (int r = 1; r <= m; ++r) {
        if (rbud[static_cast<size_t>(r - 1)] == 0) continue;
        for (int c = 1; c <= m; ++c) {
            if (cbud[static_cast<size_t>(c - 1)] == 0) continue;
            --rbud[static_cast<size_t>(r - 1)];
            --cbud[static_cast<size_t>(c - 1)];
            acc.push_back({r, c});
            bounded_words_dfs(len - 1, m, rbud, cbud, acc, out, guard);
            acc.pop_back();
            ++rbud[static_cast<size_t>(r - 1)];
            ++cbud[static_cast<size_t>(c - 1)];
        }
    }
}

std::vector<Word> words_with_exact_content(const std::vector<int>& rcont,
                                           const std::vector<int>& ccont, Guard& guard) {
    std::vector<int> row_letters = expand_content(rcont);
    std::vector<int> col_letters = expand_content(ccont);
    if (row_letters.size() != col_letters.size())
        throw std::logic_error("row/column contents of different total degree");
    std::vector<Word> out;
    for (const auto& rows : multiset_arrangements(row_letters))
        for (const auto& cols : multiset_arrangements(col_letters)) {
            guard.count();
            std::vector<Letter> letters(rows.size());
            for (size_t t = 0; t < rows.size(); ++t) letters[t] = {rows[t], cols[t]};
            out.push_back(Word(std::move(letters)));
        }
    return out;
}

std::vector<SymRow> component_rows(const std::vector<Relator>& gens, int m,
                                   const Bigrading& g, Guard& guard) {
    int degree = 0;
    for (int k : g.rows) degree += k;
    std::vector<SymRow> out;
    std::set<std::string> seen;
    for (const Relator& gen : gens) {
        std::vector<int> rem_r(static_cast<size_t>(m)), rem_c(static_cast<size_t>(m));
        bool fits = true;
        for (int t = 0; t < m && fits; ++t) {
            rem_r[static_cast<size_t>(t)] =
                g.rows[static_cast<size_t>(t)] - gen.grading.rows[static_cast<size_t>(t)];
            rem_c[static_cast<size_t>(t)] =
                g.cols[static_cast<size_t>(t)] - gen.grading.cols[static_cast<size_t>(t)];
            fits = rem_r[static_cast<size_t>(t)] >= 0 && rem_c[static_cast<size_t>(t)] >= 0;
        }
        if (!fits) continue;
        for (int du = 0; du + 2 <= degree; ++du) {
            std::vector<Word> prefixes;
            {
                std::vector<Letter> acc;
                auto rb = rem_r;
                auto cb = rem_c;
                bounded_words_dfs(du, m, rb, cb, acc, prefixes, guard);
            }
            for (const Word& u : prefixes) {
                std::vector<int> rv = rem_r, cv = rem_c;
                auto ur = u.row_content(m);
                auto uc = u.col_content(m);
                for (int t = 0; t < m; ++t) {
                    rv[static_cast<size_t>(t)] -= ur[static_cast<size_t>(t)];
                    cv[static_cast<size_t>(t)] -= uc[static_cast<size_t>(t)];
                }
                for (const Word& v : words_with_exact_content(rv, cv, guard)) {
                    SymRow row;
                    for (const auto& [w, c] : gen.element.terms())
                        row.terms.emplace(u.concat(w).concat(v), c);
                    std::string key;
                    for (const auto& [w, c] : row.terms) {
                        key += w.str();
                        key += '#';
                        key += c.str();
                        key += ';';
                    }
                    if (seen.insert(std::move(key)).second) out.push_back(std::move(row));
                }
            }
        }
    }
    return out;
}

template <class F, class Eval>
void decide_over_field(const std::vector<SymRow>& rows,
                       const std::map<Word, Coefficient>& target,
                       const std::map<Word, size_t>& dict, Eval&& eval, bool& member,
                       long& rank, long& residual) {
    const size_t cols = dict.size();
    std::vector<F> resid(cols, F{});
    for (const auto& [w, c] : target) resid[dict.at(w)] = eval(c);
    RowSpan<F> span(cols);
    member = all_zero(resid);
    for (const SymRow& row : rows) {
        if (member) break;
        std::vector<F> v(cols, F{});
        for (const auto& [w, c] : row.terms) v[dict.at(w)] = eval(c);
        if (span.insert(std::move(v))) {
            span.reduce_by_last(resid);
            if (all_zero(resid)) member = true;
        }
    }
    rank = static_cast<long>(span.rank());
    residual = member ? 0 : nonzero_count(resid);
}

}  // namespace

MembershipResult ideal_membership(const Series& s, const MatrixClass& cls, int m,
                                  MembershipOptions opts) {
    std::vector<Param> universe = cls.q_params(m);
    std::vector<ParamAssignment> points;
    if (universe.empty() || opts.symbolic) {
        points.push_back(ParamAssignment{});
    } else {
        if (opts.q_points < 1) throw std::invalid_argument("need at least one test point");
        points = rotated_assignments(universe, opts.q_points);
    }
    return ideal_membership(s, cls, m, points, std::move(opts));
}

MembershipResult ideal_membership(const Series& s, const MatrixClass& cls, int m,
                                  const std::vector<ParamAssignment>& points,
                                  MembershipOptions opts) {
    if (points.empty()) throw std::invalid_argument("need at least one test point");
    {
        std::set<std::string> seen;
        for (const auto& p : points)
            if (!seen.insert(p.str()).second)
                throw std::invalid_argument("test points must be pairwise distinct");
    }
    {
        std::vector<Param> universe = cls.q_params(m);
        std::set<Param> allowed(universe.begin(), universe.end());
        std::set<Param> used;
        s.collect_params(used);
        for (const Param& p : used)
            if (!allowed.count(p))
                throw std::invalid_argument("series parameter " + to_string(p) +
                                            " is outside the class universe");
    }

    std::vector<Relator> gens = relation_generators(cls, m);
    MembershipResult result;
    result.member = true;

    for (const auto& [grading, component] : s.components(m)) {
        auto started = std::chrono::steady_clock::now();
        ComponentVerdict verdict;
        verdict.grading = grading;
        verdict.basis_size = component_dimension(grading, opts.component_basis_limit);

        std::vector<SymRow> rows = component_rows(gens, m, grading, opts.guard);
        std::map<Word, size_t> dict;
        for (const auto& [w, c] : component.terms()) dict.emplace(w, 0);
        for (const SymRow& row : rows)
            for (const auto& [w, c] : row.terms) dict.emplace(w, 0);
        size_t next = 0;
        for (auto& [w, idx] : dict) idx = next++;

        verdict.member = true;
        if (opts.symbolic) {
            bool member = false;
            long rank = 0, residual = 0;
            decide_over_field<LaurentFraction>(
                rows, component.terms(), dict,
                [](const Coefficient& c) { return LaurentFraction(c); }, member, rank,
                residual);
            verdict.member = member;
            verdict.span_rank = rank;
            verdict.residual_terms = residual;
        } else {
            for (const ParamAssignment& point : points) {
                bool member = false;
                long rank = 0, residual = 0;
                decide_over_field<Rational>(
                    rows, component.terms(), dict,
                    [&](const Coefficient& c) { return c.evaluate(point); }, member, rank,
                    residual);
                verdict.span_rank = std::max(verdict.span_rank, rank);
                if (!member) {
                    verdict.member = false;
                    verdict.residual_terms = residual;
                    break;
                }
            }
        }

        verdict.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        result.member = result.member && verdict.member;
        result.components.push_back(std::move(verdict));
    }
    return result;
}

}  // namespace ncm
