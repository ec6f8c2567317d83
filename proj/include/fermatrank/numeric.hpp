#pragma once

// Arbitrary-precision integer and rational aliases used throughout the
// library.  Every quantity that can outgrow a machine word (p^n, genus,
// Jacobian dimensions, bound values) is an Int; every bound involving a
// field-degree reciprocal is a Rat.  No floating point enters any exact
// computation; doubles only appear in the "approx" convenience fields of
// serialized reports.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fermatrank {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0.
Int pow_int(const Int& base, unsigned exp);

// Canonical decimal rendering: "num" when the denominator is 1,
// otherwise "num/den" with den > 0 and gcd(num, den) = 1.
std::string rat_to_string(const Rat& r);

std::string int_to_string(const Int& x);

// Accepts "123", "-4", "43/2".  Throws Error(invalid_argument) on
// malformed input or a zero denominator.
Rat rat_from_string(const std::string& text);

// Accepts an optionally signed decimal integer.
Int int_from_string(const std::string& text);

double rat_to_double(const Rat& r);

}  // namespace fermatrank
