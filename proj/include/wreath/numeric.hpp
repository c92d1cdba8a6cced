#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering with `significant` significant digits. Presentation
/// only: no comparison anywhere in the toolkit goes through this string.
std::string to_decimal(const Rational& value, int significant = 10);
std::string to_decimal(const Integer& value);

Integer binomial(std::int64_t n, std::int64_t k);  // 0 outside 0 <= k <= n
Integer ipow(const Integer& base, std::uint64_t exponent);

// Overflow-checked int64 arithmetic for integer lamp values; throws
// std::overflow_error rather than wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Exact test of  a <= b + c * sqrt(d)  for integers a, b, c >= 0, d >= 0.
bool leq_plus_sqrt(const Integer& a, const Integer& b, const Integer& c,
                   const Integer& d);

}  // namespace wreath
