#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hkfl/integer.hpp"
#include "hkfl/lattice.hpp"
#include "hkfl/matrix.hpp"

namespace hkfl {

// A rational number modulo 2Z, stored reduced in [0, 2).
class QModTwoZ {
 public:
  QModTwoZ() = default;
  explicit QModTwoZ(const Rational& value);
  QModTwoZ(const Integer& numerator, const Integer& denominator);

  const Rational& value() const noexcept { return value_; }
  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  QModTwoZ operator-() const { return QModTwoZ(-value_); }
  friend QModTwoZ operator+(const QModTwoZ& a, const QModTwoZ& b) {
    return QModTwoZ(a.value_ + b.value_);
  }
  friend QModTwoZ operator-(const QModTwoZ& a, const QModTwoZ& b) {
    return QModTwoZ(a.value_ - b.value_);
  }
  friend bool operator==(const QModTwoZ& a, const QModTwoZ& b) = default;

  double to_double() const { return value_.convert_to<double>(); }
  std::string str() const { return to_string(value_); }

 private:
  Rational value_{0};
};

// Coefficients of an element of A_L on the profile's cyclic generators,
// reduced modulo the generator orders.
using Element = std::vector<std::int64_t>;

// A_L = L^v / L as a product of cyclic groups Z/d_1 x ... x Z/d_k with
// d_i | d_{i+1}, read off the Smith normal form U G V = D of the Gram matrix:
// the lift of the i-th generator is the dual vector V e_i / d_i.
struct DiscriminantProfile {
  std::vector<std::int64_t> orders;
  // Rational coordinates in the lattice basis, one vector per generator.
  std::vector<std::vector<Rational>> generator_lifts;
  // Diagonal: q(g_i) mod 2. Off-diagonal: 2 b(g_i, g_j) mod 2.
  Matrix<QModTwoZ> q_on_generators;
  std::size_t length = 0;
  // Rows of V^-1 belonging to the non-trivial factors; maps a dual vector to
  // its generator coefficients.
  Matrix<Integer> dual_to_generators;

  // |A_L| as an exact integer.
  Integer order() const;
};

DiscriminantProfile discriminant_profile(const Lattice& l);

QModTwoZ q_value(const DiscriminantProfile& p, std::span<const std::int64_t> element);
// b(e1, e2) in [0, 1).
Rational b_value(const DiscriminantProfile& p, std::span<const std::int64_t> e1,
                 std::span<const std::int64_t> e2);

Element zero_element(const DiscriminantProfile& p);
Element add(const DiscriminantProfile& p, std::span<const std::int64_t> a,
            std::span<const std::int64_t> b);
Element scale(const DiscriminantProfile& p, std::span<const std::int64_t> a,
              std::int64_t k);
Element reduce(const DiscriminantProfile& p, std::span<const std::int64_t> a);
std::int64_t element_order(const DiscriminantProfile& p, std::span<const std::int64_t> a);
bool is_zero(std::span<const std::int64_t> a);

// Class in A_L of a dual vector given in lattice-basis coordinates. Throws
// BadParameter if the vector is not in L^v.
Element class_of_dual_vector(const DiscriminantProfile& p, std::span<const Rational> x);

// Visits every element in lexicographic coefficient order. Throws TooLarge if
// |A_L| exceeds the cap.
void for_each_element(const DiscriminantProfile& p,
                      const std::function<void(const Element&)>& visit,
                      std::int64_t cap = std::int64_t{1} << 24);

struct MilgramReport {
  std::complex<double> gauss_sum;
  std::complex<double> expected;
  Signature lattice_signature;
  std::int64_t signature_mod_8 = 0;
  Integer group_order;
  double abs_error = 0.0;
  bool holds = false;
};

// Gauss sum over A_L of exp(pi i q(x)) against sqrt|A_L| exp(2 pi i sig / 8).
// milgram_report never throws on a mismatch; milgram_check raises CheckFailed
// carrying both sides.
MilgramReport milgram_report(const Lattice& l, double tolerance = 1e-9);
MilgramReport milgram_check(const Lattice& l, double tolerance = 1e-9);

}  // namespace hkfl
