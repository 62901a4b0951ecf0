#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Decimals are rejected so verdicts stay exact.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Smallest integer >= r.
Integer ceil(const Rational& r);

/// Largest rational with denominator 2^20 that is <= x - 2^-20, clamped at 0.
/// Used for every floating-point lower bound.
Rational conservative_lower(double x);

/// Narrowing for BFS keys; throws InvalidParameter on overflow.
std::int64_t to_int64(const Integer& z);

}  // namespace qgl
