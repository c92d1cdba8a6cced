#include "wreath/numeric.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace wreath {

namespace mp = boost::multiprecision;

std::string to_decimal(const Rational& value, int significant) {
  using Dec = mp::number<mp::cpp_dec_float<60>>;
  Dec v = Dec(mp::numerator(value)) / Dec(mp::denominator(value));
  return v.str(significant, std::ios_base::fmtflags(0));
}

std::string to_decimal(const Integer& value) { return value.str(); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer lamp value overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw std::overflow_error("integer lamp value overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer lamp value overflow");
  return r;
}

bool leq_plus_sqrt(const Integer& a, const Integer& b, const Integer& c,
                   const Integer& d) {
  if (c < 0 || d < 0) throw std::invalid_argument("leq_plus_sqrt: c and d must be non-negative");
  // a - b <= c*sqrt(d); the right side is non-negative.
  Integer lhs = a - b;
  if (lhs <= 0) return true;
  return lhs * lhs <= c * c * d;
}

}  // namespace wreath
