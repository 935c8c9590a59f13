#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hkfl/integer.hpp"
#include "hkfl/matrix.hpp"

namespace hkfl {

using IntMatrix = Matrix<std::int64_t>;

// An even, non-degenerate integral lattice given by its Gram matrix in a fixed
// basis. Immutable once constructed.
class Lattice {
 public:
  // Validates the Gram matrix: square, symmetric, even diagonal, det != 0.
  static Lattice from_gram(IntMatrix gram, std::string label = {});

  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return gram_.rows(); }
  const std::string& label() const noexcept { return label_; }

  Integer determinant() const;

  // Pairing <x, y> of integer coordinate vectors.
  Integer pairing(std::span<const std::int64_t> x,
                  std::span<const std::int64_t> y) const;
  Integer norm(std::span<const std::int64_t> x) const { return pairing(x, x); }

 private:
  Lattice(IntMatrix gram, std::string label)
      : gram_(std::move(gram)), label_(std::move(label)) {}

  IntMatrix gram_;
  std::string label_;
};

Lattice make_lattice(const IntMatrix& gram);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& a, std::int64_t k);

// Named lattices.
//
// E8 uses the Cartan matrix of E8 in the Bourbaki labelling of simple roots:
// the chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
Lattice lattice_u();
Lattice lattice_e8();
Lattice lattice_e8(std::int64_t scale);
Lattice lattice_a1(std::int64_t k);          // Gram [[2k]]
Lattice lattice_ln(std::int64_t n);          // U^3 + E8(-1)^2 + <-2n+2>, n >= 2
Lattice lattice_mukai();                     // U^4 + E8(-1)^2
Lattice lattice_mukai_kummer();              // U^4
Lattice lattice_kummer_h2(std::int64_t n);   // U^3 + <-2n-2>, n >= 2

// Parses "U", "E8", "E8(k)", "E8m2", "A1(k)", "Ln(n)", "Ln:n", "Mukai",
// "mukai", "MukaiKummer", "mukai-kummer", "Kummer(n)". Throws BadParameter.
Lattice named_lattice(std::string_view name);

// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const Matrix<Integer>& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::int64_t difference() const {
    return static_cast<std::int64_t>(positive) - static_cast<std::int64_t>(negative);
  }
};

// Sylvester inertia by exact symmetric elimination over the rationals.
Signature signature(const IntMatrix& gram);

// gcd of <v, w> over the basis vectors w. Throws ZeroVector for v == 0.
Integer divisibility(const Lattice& l, std::span<const std::int64_t> v);

}  // namespace hkfl
