#pragma once

#include <map>
#include <set>
#include <string>

#include "ncm/coefficient.hpp"
#include "ncm/word.hpp"

namespace ncm {

// Element of the free algebra truncated at a fixed total degree, stored as a
// sparse word -> coefficient map with no zero entries.  Coefficients are
// central, so scaling is two-sided.
class Series {
public:
    explicit Series(int max_degree);
    static Series one(int max_degree);
    static Series term(const Word& w, const Coefficient& c, int max_degree);

    int max_degree() const { return max_degree_; }
    const std::map<Word, Coefficient>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Coefficient coefficient(const Word& w) const;

    // Merges; silently drops words beyond the truncation degree.
    void add_term(const Word& w, const Coefficient& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);  // truncated product
    Series scaled(const Coefficient& c) const;
    Series operator-() const;
    bool operator==(const Series& o) const { return terms_ == o.terms_; }

    // Geometric inverse: requires the empty-word coefficient to be exactly 1,
    // i.e. the input has the shape 1 - (degree >= 1 terms).
    Series inverse() const;

    Series truncated(int lower_max_degree) const;
    Series instantiated(const ParamAssignment& a) const;
    Series substituted(const Param& target, const Coefficient& unit_value) const;

    std::map<Bigrading, Series> components(int m) const;
    void collect_params(std::set<Param>& out) const;

    std::string str() const;  // "a11 + q*a12,a21" with coefficient prefixes

private:
    int max_degree_;
    std::map<Word, Coefficient> terms_;
};

}  // namespace ncm
