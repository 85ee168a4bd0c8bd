#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ncm/coefficient.hpp"
#include "ncm/rational.hpp"

namespace ncm {

// Exact zero tests for the two scalar fields the eliminator runs over.
inline bool field_is_zero(const Rational& x) { return x == 0; }

// Fraction of Laurent polynomials, used by the symbolic membership mode.
// No GCD reduction: zero tests and arithmetic stay exact, denominators just
// grow, which is acceptable for the small components the mode is meant for.
struct LaurentFraction {
    Coefficient num;
    Coefficient den;

    LaurentFraction() : num(), den(Coefficient(1)) {}
    LaurentFraction(Coefficient n) : num(std::move(n)), den(Coefficient(1)) {}
    LaurentFraction(Coefficient n, Coefficient d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::invalid_argument("zero denominator");
    }

    friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
        if (b.num.is_zero()) throw std::invalid_argument("division by zero fraction");
        return {a.num * b.den, a.den * b.num};
    }
};

inline bool field_is_zero(const LaurentFraction& x) { return x.num.is_zero(); }

// Incremental exact Gauss-Jordan echelon over a field.  Rows are kept
// mutually reduced with pivot entries 1, so reducing any vector against the
// span is a single pass over the stored rows.
template <class F>
class RowSpan {
public:
    explicit RowSpan(size_t cols) : cols_(cols) {}

    size_t rank() const { return rows_.size(); }
    const std::vector<F>& row(size_t idx) const { return rows_[idx]; }
    size_t pivot_col(size_t idx) const { return pivot_col_[idx]; }

    void reduce(std::vector<F>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            // copy: subtract_scaled writes through v, including the pivot slot
            F factor = v[pivot_col_[r]];
            if (field_is_zero(factor)) continue;
            subtract_scaled(v, rows_[r], factor);
        }
    }

    // Returns true (and stores the reduced, normalized row) if it enlarges
    // the span.
    bool insert(std::vector<F> v) {
        if (v.size() != cols_) throw std::invalid_argument("row width mismatch");
        reduce(v);
        size_t piv = cols_;
        for (size_t c = 0; c < cols_; ++c) {
            if (!field_is_zero(v[c])) {
                piv = c;
                break;
            }
        }
        if (piv == cols_) return false;
        F lead = v[piv];
        for (size_t c = piv; c < cols_; ++c) v[c] = v[c] / lead;
        // back-substitute so existing rows stay reduced against the new pivot
        for (size_t r = 0; r < rows_.size(); ++r) {
            F factor = rows_[r][piv];
            if (!field_is_zero(factor)) subtract_scaled(rows_[r], v, factor);
        }
        pivot_col_.push_back(piv);
        rows_.push_back(std::move(v));
        return true;
    }

    // Apply only the most recently inserted pivot row to v (enough to keep a
    // vector reduced while rows stream in).
    void reduce_by_last(std::vector<F>& v) const {
        F factor = v[pivot_col_.back()];
        if (field_is_zero(factor)) return;
        subtract_scaled(v, rows_.back(), factor);
    }

private:
    static void subtract_scaled(std::vector<F>& target, const std::vector<F>& source,
                                const F& factor) {
        for (size_t c = 0; c < target.size(); ++c) {
            if (field_is_zero(source[c])) continue;
            target[c] = target[c] - factor * source[c];
        }
    }

    size_t cols_;
    std::vector<std::vector<F>> rows_;
    std::vector<size_t> pivot_col_;
};

template <class F>
bool all_zero(const std::vector<F>& v) {
    for (const F& x : v)
        if (!field_is_zero(x)) return false;
    return true;
}

template <class F>
long nonzero_count(const std::vector<F>& v) {
    long n = 0;
    for (const F& x : v)
        if (!field_is_zero(x)) ++n;
    return n;
}

}  // namespace ncm
