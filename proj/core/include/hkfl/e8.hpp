#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "hkfl/integer.hpp"
#include "hkfl/lattice.hpp"

namespace hkfl {

// All non-zero vectors of a positive-definite Gram matrix with norm <= bound,
// keyed by norm. Each list is sorted lexicographically.
struct ShortVectorTable {
  std::map<std::int64_t, std::vector<IntVector>> by_norm;
  std::int64_t bound = 0;

  std::size_t total() const;
};

inline constexpr double kDefaultVectorCap = 1e7;

// Fincke-Pohst enumeration.
//
// With G = R^T R (Cholesky), Q(x) = sum_i r_ii^2 (x_i + sum_{j>i} mu_ij x_j)^2.
// Fixing x_{i+1..n} leaves a budget T_i = B - (tail of the sum), and every
// admissible x_i lies in [-c_i - sqrt(T_i)/r_ii, -c_i + sqrt(T_i)/r_ii]. Each
// interval is widened by a fixed slack before rounding so that floating-point
// error can only add candidates, never drop one; candidates are then filtered
// by their exact integer norm.
//
// Throws BadParameter if the form is not positive definite or bound < 1, and
// BoundTooLarge when the volume estimate of the vector count exceeds `cap`.
ShortVectorTable enumerate_short_vectors(const IntMatrix& gram, std::int64_t bound,
                                         double cap = kDefaultVectorCap);

// E8 in the Cartan basis of lattice_e8(). bound must be even and >= 2.
ShortVectorTable e8_short_vectors(std::int64_t bound, double cap = kDefaultVectorCap);

// As above, but reads/writes a versioned text cache in cache_dir. The cache is
// an optimisation only: a missing, stale or corrupt file is recomputed.
ShortVectorTable e8_short_vectors_cached(std::int64_t bound,
                                         const std::optional<std::filesystem::path>& cache_dir);

std::filesystem::path e8_cache_file(const std::filesystem::path& cache_dir, std::int64_t bound);

// The 240 roots. Throws CheckFailed if they fail to generate E8 (SNF of the
// 240x8 root matrix must be all ones).
std::vector<IntVector> e8_roots();

// Class of v/2 in A_{E8(-2)}: bit i is v_i mod 2.
using ClassKey = std::uint8_t;
ClassKey class_key(const IntVector& v);

struct ClassEntry {
  std::int64_t min_norm = 0;  // E8 norm; the E8(-2) square is -2 * min_norm
  IntVector witness;
};

struct ClassCoverage {
  std::int64_t bound = 0;
  std::array<std::optional<ClassEntry>, 256> per_class;
  // Smallest norm of a *non-zero* enumerated vector in the zero class (8,
  // from twice a root), kept alongside the convention min_norm = 0.
  std::optional<std::int64_t> zero_class_min_nonzero_norm;

  std::size_t covered() const;
  // Largest min_norm over covered classes.
  std::int64_t max_min_norm() const;
};

ClassCoverage class_coverage(std::int64_t bound);
ClassCoverage class_coverage(const ShortVectorTable& table);

// q-value of the class of v/2 in A_{E8(-2)}: 0 if norm(v) = 0 mod 4, else 1.
int e8m2_q_of_class(ClassKey key);

struct RootSumWitness {
  ClassKey key = 0;
  // Pairwise-orthogonal roots summing to `vector`; empty for the zero class
  // and for the fallback case.
  std::vector<IntVector> roots;
  IntVector vector;
  std::int64_t norm = 0;
  bool orthogonal_decomposition = false;
};

// Representatives as sums of at most four pairwise-orthogonal roots, searched
// by increasing number of roots; classes without such a sum fall back to the
// class_coverage witness at bound 8.
RootSumWitness sum_of_roots_witness(ClassKey key);
std::array<RootSumWitness, 256> all_sum_of_roots_witnesses();

}  // namespace hkfl
