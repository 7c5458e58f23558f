#include <benchmark/benchmark.h>

#include <random>

#include "jsgft/gft.hpp"
#include "jsgft/jordan.hpp"
#include "jsgft/total_variation.hpp"

using namespace jsgft;

namespace {

// Strongly connected random digraph: a directed ring plus extra weighted
// edges.
Graph<Complex> random_digraph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  Matrix<Complex> a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.at((i + 1) % n, i) = Complex(weight(rng), 0);
  for (std::size_t e = 0; e < 2 * n; ++e) {
    std::size_t src = node(rng), dst = node(rng);
    if (src != dst) a.at(dst, src) = Complex(weight(rng), 0);
  }
  return {std::move(a), {}};
}

void BM_JordanDecomposition(benchmark::State& state) {
  Graph<Complex> g = random_digraph(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    JordanBasis<Complex> b = jordan_decomposition(g.adjacency);
    benchmark::DoNotOptimize(b);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JordanDecomposition)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_ProjectorSet(benchmark::State& state) {
  Graph<Complex> g = random_digraph(static_cast<std::size_t>(state.range(0)), 43);
  JordanBasis<Complex> b = jordan_decomposition(g.adjacency);
  DualBasis<Complex> d = dual_basis(b);
  for (auto _ : state) {
    SpectralProjectorSet<Complex> set = make_projector_set(b, d);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_ProjectorSet)->Arg(16)->Arg(32)->Arg(64);

void BM_GftTransform(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Graph<Complex> g = random_digraph(n, 44);
  JordanBasis<Complex> b = jordan_decomposition(g.adjacency);
  DualBasis<Complex> d = dual_basis(b);
  SpectralProjectorSet<Complex> set = make_projector_set(b, d);
  std::mt19937_64 rng(45);
  std::normal_distribution<double> gauss;
  std::vector<Complex> s(n);
  for (auto& x : s) x = Complex(gauss(rng), gauss(rng));
  GraphSignal<Complex> sig{s};
  for (auto _ : state) {
    GftDecomposition<Complex> dec = gft(sig, set, b, d);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(BM_GftTransform)->Arg(16)->Arg(32)->Arg(64);

void BM_TvOrdering(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Graph<Complex> g = random_digraph(n, 46);
  JordanBasis<Complex> b = jordan_decomposition(g.adjacency);
  for (auto _ : state) {
    auto order = tv_ordering(g, b);
    benchmark::DoNotOptimize(order);
  }
}
BENCHMARK(BM_TvOrdering)->Arg(16)->Arg(32);

void BM_CycleDecompositionExact(benchmark::State& state) {
  Graph<GaussianRational> g = directed_cycle<GaussianRational>(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    JordanBasis<GaussianRational> b = jordan_decomposition(g.adjacency);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_CycleDecompositionExact)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
