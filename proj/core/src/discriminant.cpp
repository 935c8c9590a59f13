#include "hkfl/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hkfl/error.hpp"
#include "hkfl/snf.hpp"

namespace hkfl {

QModTwoZ::QModTwoZ(const Rational& value) : value_(reduce_mod(value, 2)) {}

QModTwoZ::QModTwoZ(const Integer& numerator, const Integer& denominator)
    : QModTwoZ(Rational(numerator, denominator)) {}

Integer DiscriminantProfile::order() const {
  Integer out = 1;
  for (auto d : orders) out *= d;
  return out;
}

DiscriminantProfile discriminant_profile(const Lattice& l) {
  const std::size_t r = l.rank();
  const SnfResult snf = smith_normal_form(l.gram());
  DiscriminantProfile p;
  std::vector<std::size_t> factors;
  for (std::size_t i = 0; i < snf.diag.size(); ++i) {
    if (snf.diag[i] > 1) factors.push_back(i);
  }
  p.length = factors.size();
  p.orders.reserve(p.length);
  p.dual_to_generators = Matrix<Integer>(p.length, r);
  for (std::size_t f = 0; f < p.length; ++f) {
    const std::size_t i = factors[f];
    p.orders.push_back(to_int64(snf.diag[i]));
    std::vector<Rational> lift(r);
    for (std::size_t k = 0; k < r; ++k) lift[k] = Rational(snf.right(k, i), snf.diag[i]);
    p.generator_lifts.push_back(std::move(lift));
    for (std::size_t k = 0; k < r; ++k) p.dual_to_generators(f, k) = snf.right_inverse(i, k);
  }

  p.q_on_generators = Matrix<QModTwoZ>(p.length, p.length);
  for (std::size_t a = 0; a < p.length; ++a) {
    for (std::size_t b = a; b < p.length; ++b) {
      Rational pairing = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (p.generator_lifts[a][i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < r; ++j) row += l.gram()(i, j) * p.generator_lifts[b][j];
        pairing += p.generator_lifts[a][i] * row;
      }
      if (a == b) {
        p.q_on_generators(a, a) = QModTwoZ(pairing);
      } else {
        p.q_on_generators(a, b) = QModTwoZ(2 * pairing);
        p.q_on_generators(b, a) = p.q_on_generators(a, b);
      }
    }
  }
  return p;
}

namespace {

void check_shape(const DiscriminantProfile& p, std::span<const std::int64_t> e) {
  if (e.size() != p.length) {
    throw Error(ErrorCode::BadParameter, "element has " + std::to_string(e.size()) +
                                             " coefficients, group length is " +
                                             std::to_string(p.length));
  }
}

}  // namespace

QModTwoZ q_value(const DiscriminantProfile& p, std::span<const std::int64_t> e) {
  check_shape(p, e);
  Rational total = 0;
  for (std::size_t i = 0; i < p.length; ++i) {
    if (e[i] == 0) continue;
    total += Rational(Integer(e[i]) * e[i]) * p.q_on_generators(i, i).value();
    for (std::size_t j = i + 1; j < p.length; ++j) {
      if (e[j] == 0) continue;
      total += Rational(Integer(e[i]) * e[j]) * p.q_on_generators(i, j).value();
    }
  }
  return QModTwoZ(total);
}

Rational b_value(const DiscriminantProfile& p, std::span<const std::int64_t> e1,
                 std::span<const std::int64_t> e2) {
  check_shape(p, e1);
  check_shape(p, e2);
  Rational total = 0;
  for (std::size_t i = 0; i < p.length; ++i) {
    if (e1[i] == 0) continue;
    for (std::size_t j = 0; j < p.length; ++j) {
      if (e2[j] == 0) continue;
      // b(g_i, g_i) = q(g_i) mod 1; b(g_i, g_j) = (2b)/2 mod 1.
      const Rational bij = i == j ? p.q_on_generators(i, i).value()
                                  : p.q_on_generators(i, j).value() / 2;
      total += Rational(Integer(e1[i]) * e2[j]) * bij;
    }
  }
  return reduce_mod(total, 1);
}

Element zero_element(const DiscriminantProfile& p) { return Element(p.length, 0); }

Element reduce(const DiscriminantProfile& p, std::span<const std::int64_t> a) {
  check_shape(p, a);
  Element out(p.length);
  for (std::size_t i = 0; i < p.length; ++i) out[i] = mod_floor(a[i], p.orders[i]);
  return out;
}

Element add(const DiscriminantProfile& p, std::span<const std::int64_t> a,
            std::span<const std::int64_t> b) {
  check_shape(p, a);
  check_shape(p, b);
  Element out(p.length);
  for (std::size_t i = 0; i < p.length; ++i)
    out[i] = mod_floor(mod_floor(a[i], p.orders[i]) + mod_floor(b[i], p.orders[i]),
                       p.orders[i]);
  return out;
}

Element scale(const DiscriminantProfile& p, std::span<const std::int64_t> a,
              std::int64_t k) {
  check_shape(p, a);
  Element out(p.length);
  for (std::size_t i = 0; i < p.length; ++i) {
    const Integer v = Integer(a[i]) * k;
    out[i] = to_int64(mod_floor(v, Integer(p.orders[i])));
  }
  return out;
}

std::int64_t element_order(const DiscriminantProfile& p, std::span<const std::int64_t> a) {
  check_shape(p, a);
  std::int64_t out = 1;
  for (std::size_t i = 0; i < p.length; ++i) {
    const std::int64_t d = p.orders[i];
    const std::int64_t c = mod_floor(a[i], d);
    const std::int64_t ord = d / std::gcd(c, d);
    out = checked_mul(out / std::gcd(out, ord), ord);
  }
  return out;
}

bool is_zero(std::span<const std::int64_t> a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

Element class_of_dual_vector(const DiscriminantProfile& p, std::span<const Rational> x) {
  const std::size_t r = p.dual_to_generators.cols();
  if (x.size() != r) throw Error(ErrorCode::BadParameter, "dual vector length does not match rank");
  Element out(p.length);
  for (std::size_t f = 0; f < p.length; ++f) {
    Rational y = 0;
    for (std::size_t k = 0; k < r; ++k) y += p.dual_to_generators(f, k) * x[k];
    const Rational c = y * p.orders[f];
    if (boost::multiprecision::denominator(c) != 1) {
      throw Error(ErrorCode::BadParameter, "vector is not in the dual lattice");
    }
    out[f] = to_int64(mod_floor(boost::multiprecision::numerator(c), Integer(p.orders[f])));
  }
  return out;
}

void for_each_element(const DiscriminantProfile& p,
                      const std::function<void(const Element&)>& visit,
                      std::int64_t cap) {
  if (p.order() > cap) {
    throw Error(ErrorCode::TooLarge, "discriminant group of order " + p.order().str() +
                                         " exceeds the enumeration cap " +
                                         std::to_string(cap));
  }
  Element e(p.length, 0);
  for (;;) {
    visit(e);
    std::size_t i = p.length;
    while (i > 0) {
      --i;
      if (++e[i] < p.orders[i]) break;
      e[i] = 0;
      if (i == 0) return;
    }
    if (p.length == 0) return;
  }
}

MilgramReport milgram_report(const Lattice& l, double tolerance) {
  const DiscriminantProfile p = discriminant_profile(l);
  MilgramReport report;
  report.group_order = p.order();
  report.lattice_signature = signature(l.gram());
  report.signature_mod_8 = mod_floor(report.lattice_signature.difference(), 8);

  // exp(pi i q) depends on q mod 2 only; accumulate over exact residues.
  std::complex<double> sum = 0.0;
  for_each_element(p, [&](const Element& e) {
    const double angle = std::numbers::pi * q_value(p, e).to_double();
    sum += std::polar(1.0, angle);
  });
  report.gauss_sum = sum;
  const double magnitude = std::sqrt(report.group_order.convert_to<double>());
  report.expected = std::polar(
      magnitude, 2.0 * std::numbers::pi * static_cast<double>(report.signature_mod_8) / 8.0);
  report.abs_error = std::abs(report.gauss_sum - report.expected);
  report.holds = report.abs_error <= tolerance;
  return report;
}

MilgramReport milgram_check(const Lattice& l, double tolerance) {
  MilgramReport report = milgram_report(l, tolerance);
  if (!report.holds) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "Gauss sum " << report.gauss_sum << " != sqrt|A| exp(2 pi i sig/8) "
        << report.expected << " (signature " << report.lattice_signature.difference()
        << ", |A| = " << report.group_order << ")";
    throw Error(ErrorCode::CheckFailed, msg.str());
  }
  return report;
}

}  // namespace hkfl
