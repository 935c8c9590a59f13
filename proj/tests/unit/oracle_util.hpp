#pragma once

// Small helpers shared by the unit tests. Nothing here calls into the library
// beyond its plain data types, so the values they produce are independent.

#include <cstdint>
#include <random>
#include <vector>

#include "hkfl/integer.hpp"
#include "hkfl/lattice.hpp"

namespace hkfl::test {

// Laplace expansion; fine for the rank <= 8 matrices used here.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline Integer laplace_det(const IntMatrix& g) {
  std::vector<std::vector<Integer>> m(g.rows(), std::vector<Integer>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m[i][j] = g(i, j);
  return laplace_det(m);
}

// Random symmetric matrix with even diagonal, entries bounded by `spread`,
// redrawn until non-degenerate.
inline IntMatrix random_even_gram(std::mt19937& rng, std::size_t rank, int spread = 3) {
  std::uniform_int_distribution<int> off(-spread, spread);
  std::uniform_int_distribution<int> diag(-spread, spread);
  for (;;) {
    IntMatrix g(rank, rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      g(i, i) = 2 * diag(rng);
      for (std::size_t j = i + 1; j < rank; ++j) g(i, j) = g(j, i) = off(rng);
    }
    if (laplace_det(g) != 0) return g;
  }
}

}  // namespace hkfl::test
