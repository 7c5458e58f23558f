#include <doctest.h>

#include <random>

#include "jsgft/graph.hpp"
#include "../support/test_support.hpp"

using namespace jsgft;
using testsupport::GQ;

TEST_CASE("cycle shift is the unit delay") {
  Graph<GQ> c = directed_cycle<GQ>(4);
  GraphSignal<GQ> s = make_signal(c, {GQ(1), GQ(2), GQ(3), GQ(4)});
  GraphSignal<GQ> shifted = apply_shift(c, s);
  CHECK(shifted.values == std::vector<GQ>{GQ(4), GQ(1), GQ(2), GQ(3)});
}

TEST_CASE("shift of the zero signal is zero") {
  Graph<GQ> g{testsupport::nilpotent3_a(), {}};
  GraphSignal<GQ> zero = make_signal(g, {GQ(0), GQ(0), GQ(0)});
  for (const auto& x : apply_shift(g, zero).values) CHECK(x == GQ(0));
}

TEST_CASE("shift on the 3x3 nilpotent matrix") {
  Graph<GQ> g{testsupport::nilpotent3_a(), {}};
  GraphSignal<GQ> ones = make_signal(g, {GQ(1), GQ(1), GQ(1)});
  CHECK(apply_shift(g, ones).values == std::vector<GQ>{GQ(2), GQ(1), GQ(0)});
}

TEST_CASE("directed_cycle adjacency pattern") {
  Graph<GQ> c4 = directed_cycle<GQ>(4);
  // 1-based: C[1][4] = C[2][1] = C[3][2] = C[4][3] = 1
  CHECK(c4.adjacency(0, 3) == GQ(1));
  CHECK(c4.adjacency(1, 0) == GQ(1));
  CHECK(c4.adjacency(2, 1) == GQ(1));
  CHECK(c4.adjacency(3, 2) == GQ(1));
  CHECK(c4.edge_count() == 4);

  Graph<GQ> c1 = directed_cycle<GQ>(1);
  CHECK(c1.adjacency(0, 0) == GQ(1));  // self-loop: shift is the identity

  Graph<GQ> c2 = directed_cycle<GQ>(2);
  CHECK(c2.adjacency(0, 1) == GQ(1));
  CHECK(c2.adjacency(1, 0) == GQ(1));
  CHECK(c2.adjacency(0, 0) == GQ(0));
}

TEST_CASE("cycle shift equals cyclic delay for random signals") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1, 2, 5, 9}) {
    Graph<GQ> c = directed_cycle<GQ>(n);
    std::vector<GQ> s = testsupport::random_rational_signal(n, rng);
    std::vector<GQ> shifted = apply_shift(c, GraphSignal<GQ>{s}).values;
    for (std::size_t i = 0; i < n; ++i) CHECK(shifted[i] == s[(i + n - 1) % n]);
  }
}

TEST_CASE("shift is linear") {
  std::mt19937_64 rng(22);
  Graph<GQ> g{testsupport::random_planted_matrix(5, rng).a, {}};
  std::vector<GQ> s1 = testsupport::random_rational_signal(5, rng);
  std::vector<GQ> s2 = testsupport::random_rational_signal(5, rng);
  GQ alpha(3, 2, 0, 1), beta(-1, 1, 1, 2);
  std::vector<GQ> combined(5);
  for (std::size_t i = 0; i < 5; ++i) combined[i] = alpha * s1[i] + beta * s2[i];
  std::vector<GQ> lhs = apply_shift(g, GraphSignal<GQ>{combined}).values;
  std::vector<GQ> r1 = apply_shift(g, GraphSignal<GQ>{s1}).values;
  std::vector<GQ> r2 = apply_shift(g, GraphSignal<GQ>{s2}).values;
  for (std::size_t i = 0; i < 5; ++i) CHECK(lhs[i] == alpha * r1[i] + beta * r2[i]);
}

TEST_CASE("signal length is validated") {
  Graph<GQ> c = directed_cycle<GQ>(3);
  CHECK_THROWS_AS(make_signal(c, {GQ(1)}), Error);
  CHECK_THROWS_AS(apply_shift(c, GraphSignal<GQ>{{GQ(1), GQ(2)}}), Error);
}
