#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace emc {

// Exact nonnegative counter for every counting path (binomials, partition
// counts, family sizes). No floating point anywhere in counting code.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational for bound coefficients and density comparisons. Stored
// normalized; decimal rendering is display-only.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigCount& v);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" and plain decimals like "0.01" (which are exact
// rationals). Anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

// Display-only decimal rendering, round half away from zero.
std::string decimal_string(const Rational& q, int fractional_digits = 9);

}  // namespace emc
