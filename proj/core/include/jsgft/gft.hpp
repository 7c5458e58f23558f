#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "jsgft/graph.hpp"
#include "jsgft/spectral.hpp"

namespace jsgft {

// One spectral component: the projection of the signal onto a Jordan
// subspace, with its expansion coefficient slices in V (alpha) and W (beta)
// and the pairing energy <alpha, beta>.
template <class S>
struct SpectralComponent {
  JordanSubspaceId id;
  std::size_t dim = 0;
  std::vector<S> component;  // s_hat_ij = P_ij s
  std::vector<S> alpha;      // slice of V^{-1} s
  std::vector<S> beta;       // slice of V^H s
  S energy;                  // <alpha, beta>
};

template <class S>
struct GftDecomposition {
  std::vector<S> signal;
  std::vector<S> coeff_v;  // s_tilde_V = V^{-1} s
  std::vector<S> coeff_w;  // s_tilde_W = V^H s
  std::vector<SpectralComponent<S>> components;
  S total_energy;  // <s, s>

  const SpectralComponent<S>& component(JordanSubspaceId id) const {
    for (const auto& c : components)
      if (c.id == id) return c;
    raise(Errc::unknown_subspace, "no spectral component " + id.str());
  }
};

// The graph Fourier transform: the unique decomposition of s into its
// projections onto the Jordan subspaces.
template <class S>
GftDecomposition<S> gft(const GraphSignal<S>& s, const SpectralProjectorSet<S>& set,
                        const JordanBasis<S>& basis, const DualBasis<S>& dual) {
  const std::size_t n = basis.a.rows();
  if (s.values.size() != n) raise(Errc::dimension_mismatch, "signal length does not match graph");

  GftDecomposition<S> d;
  d.signal = s.values;
  d.coeff_v = dual.w.conjugate_transpose() * s.values;  // W^H = V^{-1}
  d.coeff_w = basis.v.conjugate_transpose() * s.values;
  d.total_energy = inner(s.values, s.values);

  d.components.reserve(set.subspaces.size());
  for (std::size_t k = 0; k < set.subspaces.size(); ++k) {
    const SubspaceSpan& span = set.subspaces[k];
    SpectralComponent<S> c;
    c.id = span.id;
    c.dim = span.dim;
    c.component = set.projectors[k] * s.values;
    c.alpha.assign(d.coeff_v.begin() + static_cast<std::ptrdiff_t>(span.col_begin),
                   d.coeff_v.begin() + static_cast<std::ptrdiff_t>(span.col_begin + span.dim));
    c.beta.assign(d.coeff_w.begin() + static_cast<std::ptrdiff_t>(span.col_begin),
                  d.coeff_w.begin() + static_cast<std::ptrdiff_t>(span.col_begin + span.dim));
    c.energy = inner(c.alpha, c.beta);
    d.components.push_back(std::move(c));
  }
  return d;
}

// s = sum of all spectral components.
template <class S>
GraphSignal<S> inverse_gft(const GftDecomposition<S>& d) {
  std::vector<S> s(d.signal.size(), ScalarOps<S>::zero());
  for (const auto& c : d.components)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += c.component[i];
  return {std::move(s)};
}

// Generalized Parseval pairing: returns (<s1, s2>, <s1_tilde_V, s2_tilde_W>).
// The two values agree exactly in exact arithmetic.
template <class S>
std::pair<S, S> parseval_pairing(const GraphSignal<S>& s1, const GraphSignal<S>& s2,
                                 const JordanBasis<S>& basis, const DualBasis<S>& dual) {
  if (s1.values.size() != s2.values.size())
    raise(Errc::dimension_mismatch, "signals have different lengths");
  if (s1.values.size() != basis.a.rows())
    raise(Errc::dimension_mismatch, "signal length does not match basis");
  std::vector<S> c1 = dual.w.conjugate_transpose() * s1.values;
  std::vector<S> c2 = basis.v.conjugate_transpose() * s2.values;
  return {inner(s1.values, s2.values), inner(c1, c2)};
}

template <class S>
S component_energy(const GftDecomposition<S>& d, JordanSubspaceId id) {
  return d.component(id).energy;
}

struct EnergyRank {
  JordanSubspaceId id;
  double magnitude = 0.0;
  double fraction = 0.0;  // magnitude / ||s||^2
};

// Components ranked by energy magnitude, descending; ties break by subspace
// id. The raw complex energies stay available on the decomposition.
template <class S>
std::vector<EnergyRank> energy_ranking(const GftDecomposition<S>& d) {
  double total = ScalarOps<S>::abs(d.total_energy);
  if (total <= 0.0) raise(Errc::zero_signal, "energy ranking of the zero signal");
  std::vector<EnergyRank> ranks;
  ranks.reserve(d.components.size());
  for (const auto& c : d.components)
    ranks.push_back({c.id, ScalarOps<S>::abs(c.energy), ScalarOps<S>::abs(c.energy) / total});
  std::sort(ranks.begin(), ranks.end(), [](const EnergyRank& a, const EnergyRank& b) {
    if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
    return a.id < b.id;
  });
  return ranks;
}

}  // namespace jsgft
