#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polynil/int_matrix.hpp"

namespace polynil {

/// Smith normal form with transformation witnesses: u * a * v == d.
struct SNFResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  /// The min(rows, cols) diagonal entries of d, each dividing the next.
  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing block a[t.., t..].
inline std::optional<Position> smallest_in_block(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer m = absolute(a(i, j));
      if (!best || m < best_abs) {
        best = Position{i, j};
        best_abs = std::move(m);
      }
    }
  return best;
}

// Smallest nonzero |entry| in column t (rows >= t) or row t (cols >= t).
inline std::optional<Position> smallest_in_cross(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (a(i, j) == 0) return;
    Integer m = absolute(a(i, j));
    if (!best || m < best_abs) {
      best = Position{i, j};
      best_abs = std::move(m);
    }
  };
  for (std::size_t i = t; i < a.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace detail

/// Smith normal form over the integers.
///
/// Pivots on the entry of smallest absolute value, clears the pivot's row and
/// column by truncated division, and repeats with the (strictly smaller)
/// remainders until the cross is clean. If some trailing entry is not a
/// multiple of the pivot, that row is folded into the pivot row and the step
/// restarts, so every pass strictly shrinks |pivot| and the loop terminates.
/// Diagonal entries come out non-negative with d_i | d_{i+1}; zeros trail.
inline SNFResult smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    d.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    d.swap_cols(x, y);
    v.swap_cols(x, y);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  };

  const std::size_t steps = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    auto start = detail::smallest_in_block(d, t);
    if (!start) break;  // trailing block is zero
    swap_rows(t, start->row);
    swap_cols(t, start->col);

    for (;;) {
      auto p = detail::smallest_in_cross(d, t);
      swap_rows(t, p->row);
      swap_cols(t, p->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        add_row(i, t, Integer(-(d(i, t) / d(t, t))));
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        add_col(j, t, Integer(-(d(t, j) / d(t, t))));
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      // Divisibility of the trailing block by the pivot.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < d.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(t, *bad_row, Integer(1));
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return SNFResult{std::move(d), std::move(u), std::move(v)};
}

}  // namespace polynil
