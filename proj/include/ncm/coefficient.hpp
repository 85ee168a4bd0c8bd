#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncm/params.hpp"
#include "ncm/rational.hpp"

namespace ncm {

// Multivariate Laurent polynomial in the formal parameters, with exact
// rational coefficients.  Exponents may be negative; zero terms are never
// stored, so is_zero is a structural test and cancellation happens eagerly.
// Parameters commute with each other and with every word, i.e. coefficients
// are central scalars of the free algebra.
class Coefficient {
public:
    // Sorted by parameter, exponents nonzero.  The empty monomial is 1.
    using Monomial = std::vector<std::pair<Param, int>>;

    Coefficient() = default;  // zero
    Coefficient(const Rational& c);
    Coefficient(long c) : Coefficient(Rational(c)) {}
    Coefficient(int c) : Coefficient(Rational(c)) {}

    static Coefficient monomial(const Param& p, int exponent, const Rational& scale = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;               // zero or a pure rational
    const Rational& constant_value() const; // requires is_constant and nonzero; 0 handled by caller
    Rational rational_value() const;        // is_constant required; zero allowed

    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;
    bool operator==(const Coefficient&) const = default;

    // Multiplicative inverse of a single-term coefficient (unit); throws on
    // anything else.  Enough for determinant weights and exchange factors.
    Coefficient unit_inverse() const;

    // Every parameter occurring in the coefficient must be assigned.
    Rational evaluate(const ParamAssignment& a) const;

    // Replace one parameter by an arbitrary invertible single-term value
    // (needed for negative exponents).  Used to relate the deformation
    // families to each other.
    Coefficient substituted(const Param& target, const Coefficient& unit_value) const;

    void collect_params(std::set<Param>& out) const;

    // "0", "1", "-q", "3/5*q12^-1", "-1 + q^2" (constant monomial first)
    std::string str() const;

private:
    void add_term(const Monomial& mono, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

}  // namespace ncm
