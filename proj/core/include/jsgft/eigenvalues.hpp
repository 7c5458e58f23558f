#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "jsgft/linalg.hpp"
#include "jsgft/matrix.hpp"

namespace jsgft {

template <class S>
struct EigenvalueEntry {
  S value;
  std::size_t algebraic;
};

enum class EigenvalueMode { backend_default, exact, floating, supplied };

template <class S>
struct EigenvalueOptions {
  EigenvalueMode mode = EigenvalueMode::backend_default;
  double eps_cluster = kDefaultEpsCluster;
  double eps_zero = kDefaultEpsZero;
  std::vector<S> supplied;
};

// All eigenvalues (with multiplicity) of a general complex matrix, via a
// dense solver. Implemented in dense_eigen_solver.cpp.
std::vector<Complex> dense_eigenvalues(const Matrix<Complex>& a);

template <class S>
Matrix<Complex> to_complex_matrix(const Matrix<S>& a) {
  return Matrix<Complex>::from_fn(a.rows(), a.cols(),
                                  [&](std::size_t i, std::size_t j) { return ScalarOps<S>::to_complex(a(i, j)); });
}

// Coefficients c[0..N] of det(x I - A) = sum c[k] x^k (monic, c[N] = 1),
// computed by the Faddeev-LeVerrier recurrence. Exact over the rationals.
template <class S>
std::vector<S> characteristic_polynomial(const Matrix<S>& a) {
  if (!a.square()) raise(Errc::dimension_mismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<S> c(n + 1, ScalarOps<S>::zero());
  c[n] = ScalarOps<S>::one();
  Matrix<S> b(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) += c[n - k + 1];
    b = a * b;
    S tr = ScalarOps<S>::zero();
    for (std::size_t i = 0; i < n; ++i) tr += b(i, i);
    c[n - k] = -(tr / ScalarOps<S>::from_int(static_cast<long>(k)));
  }
  return c;
}

// Horner evaluation of a polynomial given coefficients c[0..deg].
template <class S>
S evaluate_polynomial(const std::vector<S>& c, const S& x) {
  S acc = ScalarOps<S>::zero();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// Continued-fraction convergents of x with denominator <= max_den and
// approximation error <= max_err, nearest first.
std::vector<mpq_class> rational_candidates(double x, unsigned long max_den = 1000000,
                                           double max_err = 5e-2);

namespace detail {

// Deflates (x - root)^m out of the monic polynomial p; returns multiplicity m
// (0 when root is not a root). p is replaced by the deflated polynomial.
template <class S>
std::size_t deflate_root(std::vector<S>& p, const S& root) {
  std::size_t mult = 0;
  while (p.size() > 1) {
    // Synthetic division: p = q * (x - root) + rem.
    std::vector<S> q(p.size() - 1, ScalarOps<S>::zero());
    S carry = ScalarOps<S>::zero();
    for (std::size_t k = p.size(); k-- > 1;) {
      carry = p[k] + carry * root;
      q[k - 1] = carry;
    }
    S rem = p[0] + carry * root;
    if (!ScalarOps<S>::is_zero(rem, 0.0)) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

std::vector<std::pair<Complex, std::size_t>> cluster_eigenvalues(std::vector<Complex> roots,
                                                                 double eps_cluster);

}  // namespace detail

std::vector<EigenvalueEntry<GaussianRational>> find_eigenvalues(
    const Matrix<GaussianRational>& a, const EigenvalueOptions<GaussianRational>& opt = {});

std::vector<EigenvalueEntry<Complex>> find_eigenvalues(const Matrix<Complex>& a,
                                                       const EigenvalueOptions<Complex>& opt = {});

}  // namespace jsgft
