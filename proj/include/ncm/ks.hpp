#pragma once

#include <map>
#include <vector>

#include "ncm/master.hpp"

namespace ncm {

// Laurent polynomial in z_1..z_m with coefficients that are polynomials in
// the commuting symbols b_ij and q_i.  The key is the z-exponent vector.
class ZPolynomial {
public:
    explicit ZPolynomial(int m);
    static ZPolynomial one(int m);

    int vars() const { return m_; }
    const std::map<std::vector<int>, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const Coefficient& c);
    Coefficient coefficient_at(const std::vector<int>& exponents) const;

    ZPolynomial& operator+=(const ZPolynomial& o);
    friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
    friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b);
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
    ZPolynomial scaled(const Coefficient& c) const;
    ZPolynomial shifted(int i, int delta) const;  // multiply by z_i^delta
    ZPolynomial q_shifted(int i) const;           // the substitution z_i -> q_i z_i
    bool operator==(const ZPolynomial& o) const = default;

private:
    int m_;
    std::map<std::vector<int>, Coefficient> terms_;
};

// Action of the operator entry a_ij = z_i delta_ij - z_i b_ij E_i, where E_i
// is the q_i-shift in z_i.
ZPolynomial apply_entry(int i, int j, const ZPolynomial& p);

// Action of a word of operator entries, rightmost letter first.
ZPolynomial apply_word(const Word& w, const ZPolynomial& p);

// [z^0] prod_i (sum_j b_ij z_j / z_i ; q_i)_{k_i}, with the standard
// q-Pochhammer (a; q)_k = (1-a)(1-aq)...(1-aq^{k-1}).
Coefficient ks_pochhammer_side(int m, const TypeVector& k);

// [z^k] of the Cartier-Foata boson of the operator matrix applied to the
// constant polynomial 1.
Coefficient ks_operator_side(int m, const TypeVector& k, Guard guard = Guard());

// The two sides compared exactly as polynomials in b_ij and q_i.
VerificationReport verify_ks(int m, const TypeVector& k, MembershipOptions opts = {});

// Spot-check that the operator entries satisfy the Cartier-Foata exchange
// relations on pseudo-random polynomials.
bool ks_entries_are_cartier_foata(int m, int trials, unsigned seed);

}  // namespace ncm
