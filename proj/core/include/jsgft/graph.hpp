#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jsgft/matrix.hpp"

namespace jsgft {

// Directed graph carried by its adjacency matrix. Entry [A]_{ij} weights the
// in-edge of node i from node j. Node ids are 1-based in files and docs,
// 0-based here.
template <class S>
struct Graph {
  Matrix<S> adjacency;
  std::vector<std::string> labels;  // optional; empty or size N

  std::size_t node_count() const { return adjacency.rows(); }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < adjacency.rows(); ++i)
      for (std::size_t j = 0; j < adjacency.cols(); ++j)
        if (!ScalarOps<S>::is_zero(adjacency(i, j), 0.0)) ++n;
    return n;
  }
};

template <class S>
struct GraphSignal {
  std::vector<S> values;
};

template <class S>
GraphSignal<S> make_signal(const Graph<S>& g, std::vector<S> values) {
  if (values.size() != g.node_count())
    raise(Errc::dimension_mismatch, "signal length does not match node count");
  return {std::move(values)};
}

// The graph shift: s -> A s.
template <class S>
GraphSignal<S> apply_shift(const Graph<S>& g, const GraphSignal<S>& s) {
  if (s.values.size() != g.node_count())
    raise(Errc::dimension_mismatch, "signal length does not match node count");
  return {g.adjacency * s.values};
}

// Directed cycle: ones on the subdiagonal and the top-right corner, so the
// shift is the cyclic delay. N = 1 yields a single self-loop.
template <class S>
Graph<S> directed_cycle(std::size_t n) {
  Matrix<S> a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.at(i, (i + n - 1) % n) = ScalarOps<S>::one();
  return {std::move(a), {}};
}

// Adjacency scaled by 1/|lambda_max|. The caller supplies the spectral
// radius; see normalized_shift overloads in jordan.hpp for the
// eigenstructure-driven form.
template <class S>
Graph<S> scale_adjacency(const Graph<S>& g, const S& factor) {
  return {factor * g.adjacency, g.labels};
}

}  // namespace jsgft
