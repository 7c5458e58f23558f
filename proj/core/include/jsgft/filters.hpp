#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jsgft/gft.hpp"
#include "jsgft/graph.hpp"

namespace jsgft {

// Polynomial graph filter h(x) = h_0 + h_1 x + ... + h_L x^L. Trailing zero
// coefficients are trimmed; the zero polynomial stores no coefficients.
template <class S>
class PolynomialFilter {
 public:
  PolynomialFilter() = default;
  explicit PolynomialFilter(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && ScalarOps<S>::is_zero(coeffs_.back(), 0.0)) coeffs_.pop_back();
  }

  static PolynomialFilter shift() { return PolynomialFilter({ScalarOps<S>::zero(), ScalarOps<S>::one()}); }

  const std::vector<S>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

 private:
  std::vector<S> coeffs_;
};

// H = h(A) by Horner evaluation: H = (..(h_L A + h_{L-1} I) A + ..) + h_0 I.
template <class S>
Matrix<S> materialize(const PolynomialFilter<S>& h, const Graph<S>& g) {
  const std::size_t n = g.node_count();
  Matrix<S> result(n, n);
  if (h.is_zero()) return result;
  const auto& c = h.coefficients();
  for (std::size_t i = 0; i < n; ++i) result.at(i, i) = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    result = result * g.adjacency;
    for (std::size_t i = 0; i < n; ++i) result.at(i, i) = result(i, i) + c[k];
  }
  return result;
}

struct ShiftInvarianceResult {
  bool invariant = false;
  double commutator_norm = 0.0;     // ||A H - H A||_1, the authoritative check
  double max_sample_residual = 0.0; // max ||A H s - H A s||_1 / ||s||_1 over samples
};

// Checks A(Hs) = H(As). The commutator norm decides; sampled signals are
// diagnostics.
template <class S>
ShiftInvarianceResult shift_invariance_check(const Matrix<S>& h, const Graph<S>& g,
                                             std::size_t trials = 8, double tol_rel = 1e-9,
                                             std::uint64_t seed = 7) {
  const std::size_t n = g.node_count();
  if (h.rows() != n || h.cols() != n)
    raise(Errc::dimension_mismatch, "filter matrix does not match graph");

  ShiftInvarianceResult res;
  Matrix<S> commutator = g.adjacency * h - h * g.adjacency;
  res.commutator_norm = one_norm(commutator);
  double scale = std::max(1.0, one_norm(g.adjacency) * one_norm(h));
  if constexpr (ScalarOps<S>::exact)
    res.invariant = res.commutator_norm == 0.0;
  else
    res.invariant = res.commutator_norm <= tol_rel * scale;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-4, 4);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<S> s(n);
    for (auto& x : s) x = ScalarOps<S>::from_int(val(rng));
    double norm_s = one_norm(s);
    if (norm_s == 0.0) continue;
    std::vector<S> lhs = g.adjacency * (h * s);
    std::vector<S> rhs = h * (g.adjacency * s);
    res.max_sample_residual = std::max(res.max_sample_residual, one_norm(lhs - rhs) / norm_s);
  }
  return res;
}

// Applies H = h(A) in the spectral domain: the output decomposition is the
// GFT of H s, and each output component stays inside its Jordan subspace
// because every P_ij commutes with polynomials in A.
template <class S>
GftDecomposition<S> filter_in_spectrum(const PolynomialFilter<S>& h, const GftDecomposition<S>& d,
                                       const JordanBasis<S>& basis, const DualBasis<S>& dual,
                                       const SpectralProjectorSet<S>& set) {
  if (d.signal.size() != basis.a.rows())
    raise(Errc::dimension_mismatch, "decomposition does not match basis");
  Graph<S> g{basis.a, {}};
  Matrix<S> filter = materialize(h, g);
  GraphSignal<S> filtered{filter * d.signal};
  return gft(filtered, set, basis, dual);
}

}  // namespace jsgft
