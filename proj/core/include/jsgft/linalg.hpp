#pragma once

#include <cstddef>
#include <vector>

#include "jsgft/matrix.hpp"

namespace jsgft {

// Gauss-Jordan elimination record. Columns are processed in index order
// (lowest-index pivot preference); within a column the pivot row is chosen by
// largest magnitude. Entries whose magnitude falls at or below `eps_abs` are
// treated as zero; the exact backend ignores the threshold entirely.
template <class S>
struct Echelon {
  Matrix<S> rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

template <class S>
Echelon<S> reduced_row_echelon(Matrix<S> m, double eps_abs) {
  Echelon<S> e;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t best = pivot_row;
    if constexpr (ScalarOps<S>::exact) {
      while (best < rows && ScalarOps<S>::is_zero(m(best, col), 0.0)) ++best;
      if (best == rows) continue;
    } else {
      double best_mag = ScalarOps<S>::abs(m(pivot_row, col));
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        double mag = ScalarOps<S>::abs(m(r, col));
        if (mag > best_mag) {
          best_mag = mag;
          best = r;
        }
      }
      if (best_mag <= eps_abs) {
        for (std::size_t r = pivot_row; r < rows; ++r) m.at(r, col) = ScalarOps<S>::zero();
        continue;
      }
    }
    if (best != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot_row, j), m.at(best, j));
    const S pivot = m(pivot_row, col);
    for (std::size_t j = col; j < cols; ++j) m.at(pivot_row, j) = m(pivot_row, j) / pivot;
    m.at(pivot_row, col) = ScalarOps<S>::one();
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const S factor = m(r, col);
      if (ScalarOps<S>::is_zero(factor, 0.0)) continue;
      for (std::size_t j = col; j < cols; ++j) m.at(r, j) = m(r, j) - factor * m(pivot_row, j);
      m.at(r, col) = ScalarOps<S>::zero();
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  e.rank = e.pivot_cols.size();
  e.rref = std::move(m);
  return e;
}

// Absolute elimination threshold for a matrix: eps_zero * ||M||_1 (0 exact).
template <class S>
double elimination_threshold(const Matrix<S>& m, double eps_zero) {
  if constexpr (ScalarOps<S>::exact) return 0.0;
  return eps_zero * one_norm(m);
}

template <class S>
std::size_t rank(const Matrix<S>& m, double eps_zero = kDefaultEpsZero) {
  return reduced_row_echelon(m, elimination_threshold(m, eps_zero)).rank;
}

// Basis of Ker(M) with an explicit absolute magnitude threshold. Each
// returned vector has a 1 in one free column and the back-substituted pivot
// entries elsewhere; order follows the free columns.
template <class S>
std::vector<std::vector<S>> nullspace_abs(const Matrix<S>& m, double eps_abs) {
  Echelon<S> e = reduced_row_echelon(m, eps_abs);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(m.cols(), ScalarOps<S>::zero());
    v[f] = ScalarOps<S>::one();
    for (std::size_t p = 0; p < e.pivot_cols.size(); ++p)
      v[e.pivot_cols[p]] = -e.rref(p, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of Ker(M) at the standard relative threshold eps_zero * ||M||_1.
template <class S>
std::vector<std::vector<S>> nullspace(const Matrix<S>& m, double eps_zero = kDefaultEpsZero) {
  return nullspace_abs(m, elimination_threshold(m, eps_zero));
}

// Gauss-Jordan inverse; SingularMatrix when a pivot falls below the threshold.
template <class S>
Matrix<S> inverse(const Matrix<S>& m, double eps_zero = kDefaultEpsZero) {
  if (!m.square()) raise(Errc::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m(i, j);
    aug.at(i, n + i) = ScalarOps<S>::one();
  }
  Echelon<S> e = reduced_row_echelon(std::move(aug), elimination_threshold(m, eps_zero));
  if (e.rank < n || e.pivot_cols.back() >= n)
    raise(Errc::singular_matrix, "matrix is singular at the configured tolerance");
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.rref(i, n + j);
  return inv;
}

// Columns of `basis` (a list of vectors) stacked into a matrix.
template <class S>
Matrix<S> stack_columns(const std::vector<std::vector<S>>& basis) {
  return Matrix<S>::from_columns(basis);
}

}  // namespace jsgft
