#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ncm/rational.hpp"

namespace ncm {

// Formal commuting parameters.  The universe is closed: a parameter is one of
//   q        -- single deformation parameter
//   q{ij}    -- multiparameter deformation, stored with i < j only
//               (q{ii} = 1 and q{ji} = q{ij}^-1 are derived, never stored)
//   q{i}     -- per-row shift base of the shift-operator identity
//   b{ij}    -- commuting scalar matrix entries of the shift-operator identity
enum class ParamKind : unsigned char { Q = 0, Qij = 1, Qi = 2, Bij = 3 };

struct Param {
    ParamKind kind = ParamKind::Q;
    int i = 0;
    int j = 0;

    static Param q() { return {ParamKind::Q, 0, 0}; }
    static Param qij(int i, int j);  // requires 1 <= i < j
    static Param qi(int i);          // requires i >= 1
    static Param bij(int i, int j);  // requires i, j >= 1

    auto operator<=>(const Param&) const = default;
};

// "q", "q12", "q(12,3)" once an index exceeds 9; "q1"/"b11" analogously.
std::string to_string(const Param& p);

// Closed, validated map from parameters to nonzero rationals.
class ParamAssignment {
public:
    ParamAssignment() = default;

    void set(const Param& p, const Rational& value);  // rejects value == 0
    const Rational* find(const Param& p) const;
    const Rational& at(const Param& p) const;  // throws std::invalid_argument if unassigned
    bool empty() const { return values_.empty(); }
    const std::map<Param, Rational>& values() const { return values_; }

    std::string str() const;  // "q12=2 q13=3/5"

private:
    std::map<Param, Rational> values_;
};

// Instantiation pool used by membership checks: {2, 3/5, 7/3, 11/4, 5}.
const std::vector<Rational>& default_point_pool();

// Round r assigns pool[(index + r) mod pool size] to the index-th parameter,
// so every round gives each parameter a different nonzero value and distinct
// parameters get distinct values whenever there are at most five of them.
std::vector<ParamAssignment> rotated_assignments(const std::vector<Param>& params, int rounds);

}  // namespace ncm
