#include <doctest.h>

#include <cmath>
#include <random>

#include "jsgft/total_variation.hpp"
#include "../support/test_support.hpp"

using namespace jsgft;
using testsupport::GQ;
using testsupport::int_matrix;
using testsupport::to_float;

TEST_CASE("signal tv on hand-computed cases") {
  Graph<GQ> c4 = directed_cycle<GQ>(4);
  CHECK(signal_tv(c4, GraphSignal<GQ>{{GQ(1), GQ(0), GQ(0), GQ(0)}}) == doctest::Approx(2.0));
  CHECK(signal_tv(c4, GraphSignal<GQ>{{GQ(3), GQ(3), GQ(3), GQ(3)}}) == doctest::Approx(0.0));

  // eigenvector with ||v||_1 = 1 has TV |1 - lambda|
  JordanBasis<GQ> b = jordan_decomposition(c4.adjacency);
  JordanBasis<GQ> n = normalize_chains(b);
  for (const SubspaceSpan& s : n.subspaces) {
    Complex lambda = n.eigen_info(s.id.eig).value.to_complex();
    double tv = signal_tv(c4, GraphSignal<GQ>{n.v.column(s.col_begin)});
    CHECK(tv == doctest::Approx(std::abs(1.0 - lambda)).epsilon(1e-12));
  }
}

TEST_CASE("tv bound |1-lambda|+1") {
  CHECK(tv_bound(GQ(0)) == doctest::Approx(2.0));
  CHECK(tv_bound(GQ(1)) == doctest::Approx(1.0));
  CHECK(tv_bound(GQ(0, 1, 1, 1)) == doctest::Approx(1.0 + std::sqrt(2.0)));
}

TEST_CASE("component tv of J2(0) with V = I attains the bound 2") {
  Matrix<GQ> a = int_matrix({{0, 1}, {0, 0}});
  JordanBasis<GQ> b = jordan_decomposition(a);
  TvForms f = component_tv_forms(Graph<GQ>{a, {}}, b, {0, 0});
  CHECK(f.direct == doctest::Approx(2.0));
  CHECK(f.factored == doctest::Approx(2.0));
  CHECK(f.chain_max == doctest::Approx(2.0));
  CHECK(component_tv(Graph<GQ>{a, {}}, b, {0, 0}) == doctest::Approx(tv_bound(GQ(0))));
}

TEST_CASE("component tv on the cycle: lambda=1 gives 0, lambda=i gives sqrt(2)") {
  Graph<GQ> c4 = directed_cycle<GQ>(4);
  JordanBasis<GQ> b = jordan_decomposition(c4.adjacency);
  for (const SubspaceSpan& s : b.subspaces) {
    GQ lambda = b.eigen_info(s.id.eig).value;
    double tv = component_tv(c4, b, s.id);
    if (lambda == GQ(1)) CHECK(tv == doctest::Approx(0.0));
    if (lambda == GQ(0, 1, 1, 1)) CHECK(tv == doctest::Approx(std::sqrt(2.0)));
    if (lambda == GQ(-1)) CHECK(tv == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(component_tv(c4, b, {9, 9}), Error);
}

TEST_CASE("the three tv formulas agree on planted decompositions, exact and float") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial) % 7;
    auto planted = testsupport::random_planted_matrix(n, rng, 4, trial % 2 ? 1 : 0);
    Graph<GQ> g{planted.a, {}};
    JordanBasis<GQ> b = jordan_decomposition(planted.a);
    for (const SubspaceSpan& s : b.subspaces) {
      TvForms f = component_tv_forms(g, b, s.id);
      double hi = std::max({f.direct, f.factored, f.chain_max});
      double lo = std::min({f.direct, f.factored, f.chain_max});
      CHECK(hi - lo <= 1e-8 * std::max(1.0, hi));
    }

    Graph<Complex> gf{to_float(planted.a), {}};
    JordanBasis<Complex> bf =
        jordan_decomposition(gf.adjacency, testsupport::planted_float_options());
    for (const SubspaceSpan& s : bf.subspaces) {
      TvForms f = component_tv_forms(gf, bf, s.id);
      double hi = std::max({f.direct, f.factored, f.chain_max});
      double lo = std::min({f.direct, f.factored, f.chain_max});
      CHECK(hi - lo <= 1e-8 * std::max(1.0, hi));
    }
  }
}

TEST_CASE("tv of normalized chains never exceeds the bound |1-lambda|+1") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial) % 7;
    auto planted = testsupport::random_planted_matrix(n, rng, 4);
    Graph<GQ> g{planted.a, {}};
    JordanBasis<GQ> b = jordan_decomposition(planted.a);
    for (const TvEntry& e : tv_ordering(g, b)) {
      CHECK(e.tv <= e.bound + 1e-10);
      CHECK(e.bound_satisfied);
    }
  }
}

TEST_CASE("chain normalization leaves the represented operator unchanged") {
  std::mt19937_64 rng(73);
  auto planted = testsupport::random_planted_matrix(6, rng, 3, 1);
  JordanBasis<GQ> b = jordan_decomposition(planted.a);
  JordanBasis<GQ> n = normalize_chains(b);
  CHECK(one_norm(n.v * n.j * inverse(n.v) - planted.a) == 0.0);
  for (const SubspaceSpan& s : n.subspaces)
    CHECK(one_norm(n.block(s.id)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tv ordering sorts low frequency first with deterministic ties") {
  Graph<GQ> c4 = directed_cycle<GQ>(4);
  JordanBasis<GQ> b = jordan_decomposition(c4.adjacency);
  auto order = tv_ordering(c4, b);
  REQUIRE(order.size() == 4);
  CHECK(b.eigen_info(order.front().id.eig).value == GQ(1));   // TV 0 first
  CHECK(b.eigen_info(order.back().id.eig).value == GQ(-1));   // TV 2 last
  CHECK(order[1].tv == doctest::Approx(std::sqrt(2.0)));
  CHECK(order[2].tv == doctest::Approx(std::sqrt(2.0)));
  // equal TVs break ties by (eigenvalue order, chain index)
  CHECK(order[1].id.eig < order[2].id.eig);

  // diag(1,1,1): all TV 0, tie-break by id
  Matrix<GQ> eye = Matrix<GQ>::identity(3);
  JordanBasis<GQ> be = jordan_decomposition(eye);
  auto oe = tv_ordering(Graph<GQ>{eye, {}}, be);
  for (std::size_t k = 0; k < oe.size(); ++k) {
    CHECK(oe[k].tv == doctest::Approx(0.0));
    CHECK(oe[k].id.chain == k);
  }

  // blockdiag(J2(0), [1]): the lambda=1 chain (TV 0) precedes the lambda=0 chain
  Matrix<GQ> mixed = int_matrix({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
  JordanBasis<GQ> bm = jordan_decomposition(mixed);
  auto om = tv_ordering(Graph<GQ>{mixed, {}}, bm);
  CHECK(bm.eigen_info(om.front().id.eig).value == GQ(1));
  CHECK(bm.eigen_info(om.back().id.eig).value == GQ(0));
}

TEST_CASE("dsp consistency: cycle tv matches the classical cyclic formula") {
  std::mt19937_64 rng(74);
  for (std::size_t n : {4, 8, 16}) {
    Graph<GQ> c = directed_cycle<GQ>(n);
    std::vector<GQ> s = testsupport::random_rational_signal(n, rng);
    double classic = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      classic += (s[i] - s[(i + n - 1) % n]).abs();
    CHECK(signal_tv(c, GraphSignal<GQ>{s}) == doctest::Approx(classic).epsilon(1e-12));
  }
}

TEST_CASE("make_tv_report carries the signal tv") {
  Graph<GQ> c4 = directed_cycle<GQ>(4);
  JordanBasis<GQ> b = jordan_decomposition(c4.adjacency);
  GraphSignal<GQ> s{{GQ(1), GQ(0), GQ(0), GQ(0)}};
  TvReport<GQ> r = make_tv_report(c4, b, &s);
  REQUIRE(r.signal_value.has_value());
  CHECK(*r.signal_value == doctest::Approx(2.0));
  CHECK(r.entries.size() == 4);
}
