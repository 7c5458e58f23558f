#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "jsgft/graph.hpp"
#include "jsgft/jordan.hpp"

namespace jsgft {

// Graph total variation of a signal: ||s - A s||_1.
template <class S>
double signal_tv(const Graph<S>& g, const GraphSignal<S>& s) {
  if (s.values.size() != g.node_count())
    raise(Errc::dimension_mismatch, "signal length does not match node count");
  std::vector<S> shifted = g.adjacency * s.values;
  double tv = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    tv += ScalarOps<S>::abs(s.values[i] - shifted[i]);
  return tv;
}

// Upper bound |1 - lambda| + 1 on the total variation of a unit-1-norm chain
// block.
template <class S>
double tv_bound(const S& lambda) {
  return ScalarOps<S>::abs(ScalarOps<S>::one() - lambda) + 1.0;
}

struct TvForms {
  double direct = 0.0;     // ||V_ij - A V_ij||_1
  double factored = 0.0;   // ||V_ij (I - J_ij)||_1
  double chain_max = 0.0;  // max over chain-vector column formulas
};

namespace detail {

template <class S>
TvForms component_tv_forms_normalized(const Matrix<S>& a, const JordanBasis<S>& basis,
                                      JordanSubspaceId id) {
  const SubspaceSpan& span = basis.span_of(id);
  const S& lambda = basis.eigen_info(id.eig).value;
  Matrix<S> block = basis.block(id);

  TvForms forms;
  forms.direct = one_norm(block - a * block);

  Matrix<S> i_minus_j = Matrix<S>::identity(span.dim) - basis.jordan_block(id);
  forms.factored = one_norm(block * i_minus_j);

  // Columns of V_ij (I - J_ij): (1-lambda) v_1, then (1-lambda) v_t - v_{t-1}.
  S one_minus_lambda = ScalarOps<S>::one() - lambda;
  double best = one_norm(one_minus_lambda * block.column(0));
  for (std::size_t t = 1; t < span.dim; ++t) {
    std::vector<S> col = one_minus_lambda * block.column(t) - block.column(t - 1);
    best = std::max(best, one_norm(col));
  }
  forms.chain_max = best;
  return forms;
}

}  // namespace detail

// Total variation of one spectral component, computed three equivalent ways
// on the internally normalized chain block (each block rescaled to unit 1-norm). The graph's
// adjacency must be the matrix the basis decomposes.
template <class S>
TvForms component_tv_forms(const Graph<S>& g, const JordanBasis<S>& basis, JordanSubspaceId id) {
  if (g.node_count() != basis.a.rows())
    raise(Errc::dimension_mismatch, "graph and basis dimensions differ");
  JordanBasis<S> normalized = normalize_chains(basis);
  return detail::component_tv_forms_normalized(g.adjacency, normalized, id);
}

template <class S>
double component_tv(const Graph<S>& g, const JordanBasis<S>& basis, JordanSubspaceId id) {
  return component_tv_forms(g, basis, id).direct;
}

struct TvEntry {
  JordanSubspaceId id;
  double tv = 0.0;
  double bound = 0.0;
  bool bound_satisfied = false;
};

template <class S>
struct TvReport {
  std::vector<TvEntry> entries;  // ascending by tv (tv_ordering order)
  std::optional<double> signal_value;
};

inline constexpr double kTvBoundSlack = 1e-10;

// Subspaces ordered by ascending total variation (low graph frequency
// first); ties break by (eigenvalue order, chain index). The whole basis is
// normalized once.
template <class S>
std::vector<TvEntry> tv_ordering(const Graph<S>& g, const JordanBasis<S>& basis) {
  if (g.node_count() != basis.a.rows())
    raise(Errc::dimension_mismatch, "graph and basis dimensions differ");
  JordanBasis<S> normalized = normalize_chains(basis);
  std::vector<TvEntry> entries;
  entries.reserve(basis.subspaces.size());
  for (const SubspaceSpan& span : normalized.subspaces) {
    TvForms forms = detail::component_tv_forms_normalized(g.adjacency, normalized, span.id);
    double bound = tv_bound(normalized.eigen_info(span.id.eig).value);
    entries.push_back({span.id, forms.direct, bound, forms.direct <= bound + kTvBoundSlack});
  }
  std::sort(entries.begin(), entries.end(), [](const TvEntry& a, const TvEntry& b) {
    if (a.tv != b.tv) return a.tv < b.tv;
    return a.id < b.id;
  });
  return entries;
}

template <class S>
TvReport<S> make_tv_report(const Graph<S>& g, const JordanBasis<S>& basis,
                           const GraphSignal<S>* signal = nullptr) {
  TvReport<S> report;
  report.entries = tv_ordering(g, basis);
  if (signal) report.signal_value = signal_tv(g, *signal);
  return report;
}

}  // namespace jsgft
