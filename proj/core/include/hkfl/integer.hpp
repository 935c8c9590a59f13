#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hkfl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<std::int64_t>;

// Checked int64 arithmetic; raise ErrorCode::Overflow instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Narrow an exact integer to int64, raising Overflow when it does not fit.
std::int64_t to_int64(const Integer& value);

// Least non-negative residue.
Integer mod_floor(const Integer& a, const Integer& m);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// Reduce a rational into [0, modulus) for a positive integer modulus.
Rational reduce_mod(const Rational& value, const Integer& modulus);

// "p/q" or "p" when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Binomial coefficient C(top, k); zero when k < 0, top < 0 or k > top.
Integer binomial(std::int64_t top, std::int64_t k);

}  // namespace hkfl
