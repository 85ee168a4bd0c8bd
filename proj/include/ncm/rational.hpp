#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncm {

// Exact arbitrary-precision rational scalar.  Every number the engine touches
// bottoms out here; floating point never carries mathematical content.
using Rational = mpq_class;

// Accepts "7", "-3", "3/5", "-11/4".  Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

}  // namespace ncm
