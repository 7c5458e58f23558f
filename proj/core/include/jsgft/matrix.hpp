#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "jsgft/errors.hpp"
#include "jsgft/scalar.hpp"

namespace jsgft {

// Dense row-major matrix over one of the scalar backends. Library operations
// never mutate their inputs; `at()` exists for construction code only.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarOps<S>::zero()) {}

  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) raise(Errc::dimension_mismatch, "ragged initializer");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ScalarOps<S>::one();
    return m;
  }

  template <class Fn>
  static Matrix from_fn(std::size_t rows, std::size_t cols, Fn&& fn) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = fn(i, j);
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<S>>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) raise(Errc::dimension_mismatch, "ragged column set");
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  S& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<S> column(std::size_t j) const {
    std::vector<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix columns(std::size_t begin, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m.at(i, j) = (*this)(i, begin + j);
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = (*this)(i, j);
    return m;
  }

  Matrix conjugate_transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = ScalarOps<S>::conj((*this)(i, j));
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) raise(Errc::dimension_mismatch, "matrix product shape");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (ScalarOps<S>::exact && ScalarOps<S>::is_zero(aik, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
    return m;
  }

  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& v) {
    if (a.cols_ != v.size()) raise(Errc::dimension_mismatch, "matrix-vector shape");
    std::vector<S> out(a.rows_, ScalarOps<S>::zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      raise(Errc::dimension_mismatch, "matrix shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<S> data_;
};

// Induced L1 norm: maximum absolute column sum.
template <class S>
double one_norm(const Matrix<S>& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += ScalarOps<S>::abs(m(i, j));
    best = std::max(best, sum);
  }
  return best;
}

template <class S>
double one_norm(const std::vector<S>& v) {
  double sum = 0.0;
  for (const S& x : v) sum += ScalarOps<S>::abs(x);
  return sum;
}

template <class S>
double max_abs(const Matrix<S>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, ScalarOps<S>::abs(m(i, j)));
  return best;
}

template <class S>
std::vector<S> operator+(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) raise(Errc::dimension_mismatch, "vector sum shape");
  std::vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <class S>
std::vector<S> operator-(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) raise(Errc::dimension_mismatch, "vector difference shape");
  std::vector<S> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <class S>
std::vector<S> operator*(const S& s, const std::vector<S>& v) {
  std::vector<S> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

// <x, y> = y^H x; the one inner-product convention used throughout.
template <class S>
S inner(const std::vector<S>& x, const std::vector<S>& y) {
  if (x.size() != y.size()) raise(Errc::dimension_mismatch, "inner product shape");
  S acc = ScalarOps<S>::zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * ScalarOps<S>::conj(y[i]);
  return acc;
}

}  // namespace jsgft
