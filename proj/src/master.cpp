#include "ncm/master.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ncm {

namespace {

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

std::vector<TypeVector> all_types(int m, int total_max) {
    std::vector<TypeVector> out;
    std::vector<int> acc;
    types_up_to(m, total_max, acc, out);
    return out;
}

Coefficient column_symbol_weight(const MatrixClass& cls, const std::vector<int>& column_word) {
    Coefficient w(1);
    for (const auto& [s, t] : inversion_pairs(column_word))
        w *= cls.q_symbol(column_word[t], column_word[s]);
    return w;
}

}  // namespace

Series boson_term(const MatrixClass& cls, int m, const TypeVector& k, int max_degree,
                  Guard guard) {
    Series out(max_degree);
    for (const Word& w : enumerate_sequences(SequenceKind::OSequence, k, m, 0, guard))
        out.add_term(w, column_symbol_weight(cls, w.col_word()));
    return out;
}

Series boson_sum(const MatrixClass& cls, int m, int max_degree, Guard guard) {
    Series out(max_degree);
    for (const TypeVector& k : all_types(m, max_degree))
        out += boson_term(cls, m, k, max_degree, guard);
    return out;
}

Series master_series(const MatrixClass& cls, int m, int max_degree, Guard guard) {
    SymbolicMatrix a = SymbolicMatrix::letters(m, max_degree);
    Series fermion = determinant(a.identity_minus(), det_flavor(cls), cls.gamma());
    return fermion * boson_sum(cls, m, max_degree, guard) - Series::one(max_degree);
}

Series quasidet_series(const MatrixClass& cls, int m, int max_degree) {
    if (cls.kind() == MatrixClass::Kind::Super)
        throw std::invalid_argument(
            "the quasideterminant identity is not available for the super class");
    SymbolicMatrix a = SymbolicMatrix::letters(m, max_degree);
    SymbolicMatrix ia = a.identity_minus();
    DetFlavor flavor = det_flavor(cls);
    Series fermion = determinant(ia, flavor);
    Series top_minor = determinant(ia.minor_at(0, 0), flavor);

    // closed walks at height 1 over the scaled entries, summed by length
    SymbolicMatrix scaled = scaled_letters(m, max_degree, cls);
    std::vector<Series> at(static_cast<size_t>(m), Series(max_degree));
    at[0] += Series::one(max_degree);
    Series walks = at[0];
    for (int len = 1; len <= max_degree; ++len) {
        std::vector<Series> next(static_cast<size_t>(m), Series(max_degree));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                next[static_cast<size_t>(j)] +=
                    at[static_cast<size_t>(i)] *
                    scaled.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
        at = std::move(next);
        walks += at[0];
    }
    return fermion * walks - top_minor;
}

Series transport(const Series& s, const MatrixClass& cls) {
    Series out(s.max_degree());
    for (const auto& [w, c] : s.terms()) {
        std::vector<int> rows = w.row_word();
        std::vector<int> cols = w.col_word();
        Coefficient weight(1);
        for (const auto& [st, tt] : inversion_pairs(cols))
            weight *= cls.q_symbol(cols[tt], cols[st]);
        for (const auto& [st, tt] : inversion_pairs(rows))
            weight *= cls.q_symbol(rows[tt], rows[st]).unit_inverse();
        out.add_term(w, c * weight);
    }
    return out;
}

Series with_scaled_coefficient(const Series& s, const Word& w, const Rational& factor) {
    Coefficient c = s.coefficient(w);
    if (c.is_zero())
        throw std::invalid_argument("word " + w.str() + " has no coefficient to mutate");
    Series out = s;
    out.add_term(w, c * Coefficient(factor) - c);
    return out;
}

namespace {

VerificationReport base_report(const std::string& check, const MatrixClass& cls, int m,
                               int truncation, const MembershipOptions& opts) {
    VerificationReport r;
    r.check = check;
    r.matrix_class = cls.name();
    r.m = m;
    r.truncation = truncation;
    r.q_points = opts.q_points;
    r.symbolic = opts.symbolic;
    r.gamma = cls.gamma();
    return r;
}

CheckRecord membership_record(std::string name, const Series& s, const MatrixClass& cls,
                              int m, const MembershipOptions& opts) {
    CheckRecord rec;
    rec.name = std::move(name);
    if (cls.kind() == MatrixClass::Kind::Commutative) {
        Series collapsed = normal_form(s, cls);
        rec.pass = collapsed.is_zero();
        rec.detail = rec.pass ? "commutative collapse is exactly zero"
                              : "commutative collapse keeps " +
                                    std::to_string(collapsed.term_count()) + " terms";
    } else {
        MembershipResult mem = ideal_membership(s, cls, m, opts);
        rec.pass = mem.member;
        rec.components = std::move(mem.components);
        double total = 0.0;
        for (const ComponentVerdict& v : rec.components) total += v.elapsed_ms;
        rec.elapsed_ms = total;
    }
    return rec;
}

}  // namespace

VerificationReport verify_master(const MatrixClass& cls, int m, int max_degree,
                                 MembershipOptions opts) {
    VerificationReport report = base_report("master", cls, m, max_degree, opts);
    Series s = master_series(cls, m, max_degree, opts.guard);
    report.add(membership_record("det(I-A) * boson - 1", s, cls, m, opts));
    return report;
}

VerificationReport verify_quasidet(const MatrixClass& cls, int m, int max_degree,
                                   MembershipOptions opts) {
    VerificationReport report = base_report("quasidet", cls, m, max_degree, opts);
    Series s = quasidet_series(cls, m, max_degree);
    report.add(membership_record("det(I-A) * walks(1->1) - det(I-A^11)", s, cls, m, opts));
    return report;
}

VerificationReport verify_detlemmas(const MatrixClass& cls, int m, MembershipOptions opts) {
    VerificationReport report = base_report("detlemmas", cls, m, m, opts);
    for (DetLemmaCase& item : verify_det_lemmas(cls, m, opts)) {
        CheckRecord rec;
        rec.name = std::move(item.name);
        rec.pass = item.pass;
        rec.components = std::move(item.membership.components);
        for (const ComponentVerdict& v : rec.components) rec.elapsed_ms += v.elapsed_ms;
        report.add(std::move(rec));
    }
    return report;
}

}  // namespace ncm
