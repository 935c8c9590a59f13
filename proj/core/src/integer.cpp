#include "hkfl/integer.hpp"

#include <limits>

#include "hkfl/error.hpp"

namespace hkfl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "int64 addition overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "int64 multiplication overflow");
  }
  return out;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow,
                "value " + value.str() + " exceeds the int64 range");
  }
  return value.convert_to<std::int64_t>();
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Rational reduce_mod(const Rational& value, const Integer& modulus) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  // value = num/den; reduce num modulo modulus*den.
  const Integer r = mod_floor(num, modulus * den);
  return Rational(r, den);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer binomial(std::int64_t top, std::int64_t k) {
  if (k < 0 || top < 0 || k > top) return 0;
  if (k > top - k) k = top - k;
  Integer out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= top - k + i;
    out /= i;
  }
  return out;
}

}  // namespace hkfl
