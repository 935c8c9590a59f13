#pragma once

#include <vector>

#include "hkfl/integer.hpp"
#include "hkfl/lattice.hpp"
#include "hkfl/matrix.hpp"

namespace hkfl {

// left * m * right == diag(diag) (padded with zeros to m's shape), with
// d_1 | d_2 | ... and every d_i >= 0. right_inverse is right^-1, kept so that
// callers can move between the original and the diagonal coordinates.
struct SnfResult {
  std::vector<Integer> diag;
  Matrix<Integer> left;
  Matrix<Integer> right;
  Matrix<Integer> right_inverse;
};

// Deterministic: the pivot is always the entry of smallest absolute value in
// the active block, ties broken in row-major order.
SnfResult smith_normal_form(const Matrix<Integer>& m);
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace hkfl
