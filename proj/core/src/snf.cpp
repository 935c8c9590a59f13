#include "hkfl/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace hkfl {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

class SnfWorker {
 public:
  explicit SnfWorker(const Matrix<Integer>& m)
      : a_(m),
        left_(Matrix<Integer>::identity(m.rows())),
        right_(Matrix<Integer>::identity(m.cols())),
        right_inv_(Matrix<Integer>::identity(m.cols())) {}

  SnfResult run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    std::vector<Integer> diag;
    diag.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      move_to(t, *pivot);
      reduce_at(t);
      if (a_(t, t) < 0) {
        a_.negate_row(t);
        left_.negate_row(t);
      }
      diag.push_back(a_(t, t));
    }
    diag.resize(steps, Integer(0));
    return SnfResult{std::move(diag), std::move(left_), std::move(right_),
                     std::move(right_inv_)};
  }

 private:
  std::optional<Position> smallest_in_block(std::size_t t) const {
    std::optional<Position> best;
    Integer best_abs = 0;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Integer v = abs(a_(i, j));
        if (!best || v < best_abs) {
          best = Position{i, j};
          best_abs = std::move(v);
        }
      }
    return best;
  }

  void swap_rows(std::size_t x, std::size_t y) {
    a_.swap_rows(x, y);
    left_.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a_.swap_cols(x, y);
    right_.swap_cols(x, y);
    right_inv_.swap_rows(x, y);
  }
  // row[target] += f * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_row(target, source, f);
    left_.add_row(target, source, f);
  }
  // col[target] += f * col[source]; the inverse operation on right^-1 is
  // row[source] -= f * row[target].
  void add_col(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_col(target, source, f);
    right_.add_col(target, source, f);
    right_inv_.add_row(source, target, -f);
  }

  void move_to(std::size_t t, Position p) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  }

  // Clears row t and column t outside the pivot and enforces that the pivot
  // divides the remaining block.
  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        const Integer q = a_(i, t) / a_(t, t);
        if (q != 0) add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        const Integer q = a_(t, j) / a_(t, t);
        if (q != 0) add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::optional<Position> best;
        Integer best_abs = 0;
        for (std::size_t i = t; i < a_.rows(); ++i) {
          if (a_(i, t) == 0) continue;
          Integer v = abs(a_(i, t));
          if (!best || v < best_abs) { best = Position{i, t}; best_abs = std::move(v); }
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(t, j) == 0) continue;
          Integer v = abs(a_(t, j));
          if (!best || v < best_abs) { best = Position{t, j}; best_abs = std::move(v); }
        }
        move_to(t, *best);
        continue;
      }
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a_.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(i, j) % a_(t, t) != 0) { offending = i; break; }
      if (!offending) return;
      add_row(t, *offending, Integer(1));
    }
  }

  Matrix<Integer> a_;
  Matrix<Integer> left_;
  Matrix<Integer> right_;
  Matrix<Integer> right_inv_;
};

}  // namespace

SnfResult smith_normal_form(const Matrix<Integer>& m) { return SnfWorker(m).run(); }

SnfResult smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(m.cast<Integer>());
}

}  // namespace hkfl
