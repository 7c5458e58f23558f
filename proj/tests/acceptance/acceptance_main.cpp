// Acceptance suite: one criterion per function, one pass/fail line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jsgft/filters.hpp"
#include "jsgft/gft.hpp"
#include "jsgft/pipeline.hpp"
#include "jsgft/total_variation.hpp"
#include "../support/test_support.hpp"

using namespace jsgft;
using testsupport::GQ;
using testsupport::to_float;

namespace {

struct Outcome {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

class Check {
 public:
  bool operator()(bool cond, const std::string& msg) {
    if (!cond && first_failure_.empty()) first_failure_ = msg;
    ok_ = ok_ && cond;
    return cond;
  }
  bool ok() const { return ok_; }
  const std::string& failure() const { return first_failure_; }

 private:
  bool ok_ = true;
  std::string first_failure_;
};

template <class Fn>
Outcome timed(const std::string& name, Fn&& fn) {
  Outcome out;
  out.name = name;
  auto start = std::chrono::steady_clock::now();
  Check check;
  try {
    fn(check);
    out.pass = check.ok();
    out.detail = check.failure();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// Max over all pairs of ||P_k P_l - delta_kl P_k||_1 on materialized
// projectors (the dense oracle; the factored form in the library is checked
// against this elsewhere).
template <class S>
double dense_projector_algebra_worst(const SpectralProjectorSet<S>& set) {
  double worst = 0.0;
  for (std::size_t k = 0; k < set.projectors.size(); ++k)
    for (std::size_t l = 0; l < set.projectors.size(); ++l) {
      Matrix<S> prod = set.projectors[k] * set.projectors[l];
      if (k == l) prod = prod - set.projectors[k];
      worst = std::max(worst, one_norm(prod));
    }
  return worst;
}

// Z_i0 via the direct definition V 1_{a_i} V^{-1}.
template <class S>
Matrix<S> direct_component_matrix(const JordanBasis<S>& basis, const DualBasis<S>& dual,
                                  std::size_t eig) {
  std::size_t begin = SIZE_MAX, end = 0;
  for (const SubspaceSpan& s : basis.subspaces) {
    if (s.id.eig != eig) continue;
    begin = std::min(begin, s.col_begin);
    end = std::max(end, s.col_begin + s.dim);
  }
  SubspaceSpan whole{{eig, 0}, end - begin, begin};
  return basis.v.columns(begin, end - begin) * dual.block_rows(whole);
}

Eigenstructure<GQ> nilpotent3_structure() {
  EigenvalueInfo<GQ> info{GQ(0), 3, 1, 3, {3}};
  return {{info}, 3};
}

// --- criterion 1 -----------------------------------------------------------

void criterion1(Check& check) {
  Matrix<GQ> a = testsupport::nilpotent3_a();
  JordanBasis<GQ> b = jordan_decomposition(a);
  check(b.structure.eigenvalues.size() == 1, "expected a single eigenvalue");
  const auto& info = b.structure.eigenvalues[0];
  check(info.value == GQ(0), "eigenvalue is not 0");
  check(info.algebraic == 3, "algebraic multiplicity != 3");
  check(info.geometric == 1, "geometric multiplicity != 1");
  check(info.partial_multiplicities == std::vector<std::size_t>{3}, "expected one chain of length 3");

  // both reference bases pass the A V = V J validator
  for (Matrix<GQ> v : {testsupport::nilpotent3_v1(), testsupport::nilpotent3_v2()}) {
    JordanBasis<GQ> vb = make_jordan_basis(a, v, nilpotent3_structure());
    check(jordan_residual(a, vb.v, vb.j) == 0.0, "reference basis fails A V = V J");
  }

  // the GFT of any signal is a single component equal to the signal,
  // identical under both bases
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    GraphSignal<GQ> sig{testsupport::random_rational_signal(3, rng)};
    std::vector<GQ> first;
    for (Matrix<GQ> v : {testsupport::nilpotent3_v1(), testsupport::nilpotent3_v2()}) {
      JordanBasis<GQ> vb = make_jordan_basis(a, v, nilpotent3_structure());
      DualBasis<GQ> d = dual_basis(vb);
      GftDecomposition<GQ> dec = gft(sig, make_projector_set(vb, d), vb, d);
      check(dec.components.size() == 1, "expected a single spectral component");
      check(dec.components[0].component == sig.values, "component != signal");
      if (first.empty())
        first = dec.components[0].component;
      else
        check(first == dec.components[0].component, "components differ across bases");
    }
  }
}

// --- criteria 2 and 3 -------------------------------------------------------

void criterion2(Check& check) {
  std::mt19937_64 rng(202);
  int float_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 4 + static_cast<std::size_t>(trial) % 7;  // 4..10
    auto planted = testsupport::random_planted_matrix(n, rng, 4, trial % 3 == 0 ? 1 : 0);

    // exact backend: projector algebra with exact equality
    JordanBasis<GQ> b = jordan_decomposition(planted.a);
    DualBasis<GQ> d = dual_basis(b);
    SpectralProjectorSet<GQ> set = make_projector_set(b, d);
    check(dense_projector_algebra_worst(set) == 0.0, "exact projector products are not mutually annihilating idempotents");
    for (std::size_t i = 0; i < set.component_matrices.size(); ++i)
      check(one_norm(set.component_matrices[i] - direct_component_matrix(b, d, i)) == 0.0,
            "exact sum of projectors != component matrix");
    Matrix<GQ> sum(n, n);
    for (const auto& p : set.projectors) sum = sum + p;
    check(sum == Matrix<GQ>::identity(n), "exact projectors do not resolve the identity");

    // float backend on the same matrix: residuals at 1e-8
    Matrix<Complex> af = to_float(planted.a);
    JordanBasis<Complex> bf = jordan_decomposition(af, testsupport::planted_float_options());
    DualBasis<Complex> df = dual_basis(bf);
    SpectralProjectorSet<Complex> setf = make_projector_set(bf, df);
    double worst = dense_projector_algebra_worst(setf);
    for (std::size_t i = 0; i < setf.component_matrices.size(); ++i)
      worst = std::max(worst, one_norm(setf.component_matrices[i] -
                                       direct_component_matrix(bf, df, i)));
    Matrix<Complex> sumf(n, n);
    for (const auto& p : setf.projectors) sumf = sumf + p;
    worst = std::max(worst, one_norm(sumf - Matrix<Complex>::identity(n)));
    if (worst > 1e-8) ++float_failures;
  }
  check(float_failures == 0,
        "float projector-algebra residual exceeded 1e-8 on " + std::to_string(float_failures) +
            " of 100 matrices");
}

void criterion3(Check& check) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 4 + static_cast<std::size_t>(trial) % 7;
    auto planted = testsupport::random_planted_matrix(n, rng, 4, trial % 3 == 0 ? 1 : 0);
    std::vector<GQ> s = testsupport::random_rational_signal(n, rng);

    JordanBasis<GQ> b = jordan_decomposition(planted.a);
    DualBasis<GQ> d = dual_basis(b);
    GftDecomposition<GQ> dec = gft(GraphSignal<GQ>{s}, make_projector_set(b, d), b, d);
    check(inverse_gft(dec).values == s, "exact GFT round trip failed");
    auto [lhs, rhs] = parseval_pairing(GraphSignal<GQ>{s}, GraphSignal<GQ>{s}, b, d);
    check(lhs == rhs, "exact Parseval identity failed");
    GQ energy_sum(0);
    for (const auto& c : dec.components) energy_sum += c.energy;
    check(energy_sum == dec.total_energy, "exact energies do not sum to ||s||^2");

    // float backend
    Matrix<Complex> af = to_float(planted.a);
    std::vector<Complex> sf = to_float(s);
    JordanBasis<Complex> bf = jordan_decomposition(af, testsupport::planted_float_options());
    DualBasis<Complex> df = dual_basis(bf);
    GftDecomposition<Complex> decf =
        gft(GraphSignal<Complex>{sf}, make_projector_set(bf, df), bf, df);
    double scale = std::max(1.0, one_norm(sf));
    check(one_norm(inverse_gft(decf).values - sf) <= 1e-8 * scale,
          "float GFT round trip residual exceeded 1e-8");
    auto [lf, rf] = parseval_pairing(GraphSignal<Complex>{sf}, GraphSignal<Complex>{sf}, bf, df);
    double escale = std::max(1.0, std::abs(decf.total_energy));
    check(std::abs(lf - rf) <= 1e-8 * escale, "float Parseval residual exceeded 1e-8");
    Complex esum = 0.0;
    for (const auto& c : decf.components) esum += c.energy;
    check(std::abs(esum - decf.total_energy) <= 1e-8 * escale,
          "float energy additivity residual exceeded 1e-8");
  }
}

// --- criterion 4 ------------------------------------------------------------

void criterion4(Check& check) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 4 + static_cast<std::size_t>(trial) % 7;
    auto planted = testsupport::random_planted_matrix(n, rng, 4, 1);
    JordanBasis<GQ> b1 = jordan_decomposition(planted.a);
    JordanBasis<GQ> b2 = regenerate_chains(b1, 5000 + static_cast<std::uint64_t>(trial));
    auto match = match_subspaces(b1, b2);

    DualBasis<GQ> d1 = dual_basis(b1), d2 = dual_basis(b2);
    SpectralProjectorSet<GQ> s1 = make_projector_set(b1, d1), s2 = make_projector_set(b2, d2);
    std::vector<GQ> sig = testsupport::random_rational_signal(n, rng);
    GftDecomposition<GQ> dec1 = gft(GraphSignal<GQ>{sig}, s1, b1, d1);
    GftDecomposition<GQ> dec2 = gft(GraphSignal<GQ>{sig}, s2, b2, d2);

    for (std::size_t k = 0; k < match.size(); ++k) {
      if (!check(match[k] != kUnmatchedSubspace, "subspace failed to match across bases")) continue;
      check(s1.projectors[k] == s2.projectors[match[k]],
            "projectors differ across independently generated bases");
      check(dec1.components[k].component == dec2.components[match[k]].component,
            "spectral components differ across independently generated bases");
    }
  }
}

// --- criterion 5 ------------------------------------------------------------

void criterion5(Check& check) {
  std::mt19937_64 rng(505);
  // planted family: three-form agreement and the bound
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 3 + static_cast<std::size_t>(trial) % 8;
    auto planted = testsupport::random_planted_matrix(n, rng, 4, trial % 2);
    Graph<GQ> g{planted.a, {}};
    JordanBasis<GQ> b = jordan_decomposition(planted.a);
    for (const SubspaceSpan& s : b.subspaces) {
      TvForms f = component_tv_forms(g, b, s.id);
      double hi = std::max({f.direct, f.factored, f.chain_max});
      double lo = std::min({f.direct, f.factored, f.chain_max});
      check(hi - lo <= 1e-8 * std::max(1.0, hi), "TV three-form disagreement above 1e-8");
    }
    for (const TvEntry& e : tv_ordering(g, b))
      check(e.tv <= e.bound + 1e-10, "TV bound violated after normalization");

    Graph<Complex> gf{to_float(planted.a), {}};
    JordanBasis<Complex> bf = jordan_decomposition(gf.adjacency, testsupport::planted_float_options());
    for (const SubspaceSpan& s : bf.subspaces) {
      TvForms f = component_tv_forms(gf, bf, s.id);
      double hi = std::max({f.direct, f.factored, f.chain_max});
      double lo = std::min({f.direct, f.factored, f.chain_max});
      check(hi - lo <= 1e-8 * std::max(1.0, hi), "float TV three-form disagreement above 1e-8");
    }
    for (const TvEntry& e : tv_ordering(gf, bf))
      check(e.tv <= e.bound + 1e-10, "float TV bound violated after normalization");
  }

  // bound attained (equality) for A = J_r(lambda) with V = I, r >= 2
  std::vector<GQ> lambdas{GQ(0), GQ(2), GQ(0, 1, 1, 1), GQ(1, 2, -1, 4)};
  for (const GQ& lambda : lambdas) {
    for (std::size_t r = 2; r <= 4; ++r) {
      Matrix<GQ> a(r, r);
      for (std::size_t t = 0; t < r; ++t) {
        a.at(t, t) = lambda;
        if (t + 1 < r) a.at(t, t + 1) = GQ(1);
      }
      EigenvalueOptions<GQ> opt;
      opt.mode = EigenvalueMode::supplied;
      opt.supplied = {lambda};
      JordanBasis<GQ> b = jordan_decomposition(a, opt);
      check(b.v == Matrix<GQ>::identity(r), "Jordan block should decompose with V = I");
      double tv = component_tv(Graph<GQ>{a, {}}, b, {0, 0});
      double bound = tv_bound(lambda);
      check(std::abs(tv - bound) <= 1e-12, "bound not attained on a pure Jordan block");
    }
  }
}

// --- criterion 6 ------------------------------------------------------------

void criterion6(Check& check) {
  const double pi = std::acos(-1.0);
  for (std::size_t n : {4, 8, 16}) {
    Graph<Complex> c = directed_cycle<Complex>(n);

    // shift is the cyclic delay
    std::mt19937_64 rng(600 + n);
    std::normal_distribution<double> gauss;
    std::vector<Complex> s(n);
    for (auto& x : s) x = Complex(gauss(rng), gauss(rng));
    std::vector<Complex> shifted = apply_shift(c, GraphSignal<Complex>{s}).values;
    for (std::size_t i = 0; i < n; ++i)
      check(std::abs(shifted[i] - s[(i + n - 1) % n]) == 0.0, "cycle shift is not the delay");

    JordanBasis<Complex> b = jordan_decomposition(c.adjacency);
    DualBasis<Complex> d = dual_basis(b);
    SpectralProjectorSet<Complex> set = make_projector_set(b, d);
    check(b.subspaces.size() == n, "cycle eigenvalues are not simple");

    // projector onto lambda = e^{-j 2 pi k / N} matches the rank-1 DFT
    // projector u_k u_k^H with u_k[t] = e^{+j 2 pi k t / N} / sqrt(N)
    for (std::size_t k = 0; k < n; ++k) {
      Complex lambda = std::exp(Complex(0, -2.0 * pi * static_cast<double>(k) / static_cast<double>(n)));
      std::size_t found = SIZE_MAX;
      for (std::size_t i = 0; i < b.structure.eigenvalues.size(); ++i)
        if (std::abs(b.structure.eigenvalues[i].value - lambda) < 1e-6) found = i;
      if (!check(found != SIZE_MAX, "DFT frequency missing from the spectrum")) continue;
      Matrix<Complex> dft(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t cc = 0; cc < n; ++cc) {
          double phase = 2.0 * pi * static_cast<double>(k) *
                         (static_cast<double>(r) - static_cast<double>(cc)) / static_cast<double>(n);
          dft.at(r, cc) = std::exp(Complex(0, phase)) / static_cast<double>(n);
        }
      const Matrix<Complex>& p = set.projector_for({found, 0});
      check(one_norm(p - dft) <= 1e-9, "cycle projector differs from the DFT projector");
    }

    // TV ordering: lambda = 1 first, lambda = -1 last
    auto order = tv_ordering(c, b);
    check(std::abs(b.eigen_info(order.front().id.eig).value - Complex(1, 0)) < 1e-9,
          "lambda = 1 is not the lowest frequency");
    check(std::abs(b.eigen_info(order.back().id.eig).value - Complex(-1, 0)) < 1e-9,
          "lambda = -1 is not the highest frequency");
  }
}

// --- criterion 7 ------------------------------------------------------------

Graph<Complex> random_strong_digraph(std::size_t n, std::mt19937_64& rng) {
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

void criterion7(Check& check) {
  const std::size_t n = 200;
  std::mt19937_64 rng(707);
  Graph<Complex> g = random_strong_digraph(n, rng);

  // decompose once via the library API
  JordanBasis<Complex> b = jordan_decomposition(g.adjacency);
  DualBasis<Complex> d = dual_basis(b);
  SpectralProjectorSet<Complex> set = make_projector_set(b, d);

  // dominant (Perron) eigenvalue and its subspace
  std::size_t dominant = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.structure.eigenvalues.size(); ++i) {
    double mag = std::abs(b.structure.eigenvalues[i].value);
    if (mag > best) {
      best = mag;
      dominant = i;
    }
  }
  JordanSubspaceId planted_id{dominant, 0};
  const SubspaceSpan& span = b.span_of(planted_id);
  check(span.dim == 1, "dominant eigenvalue is not simple");
  std::vector<Complex> v = b.v.column(span.col_begin);
  double v2 = 0.0;
  for (const Complex& x : v) v2 += std::norm(x);
  Complex inv_norm(1.0 / std::sqrt(v2), 0.0);
  for (auto& x : v) x *= inv_norm;

  std::normal_distribution<double> gauss;
  int hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = 10.0 * v[i] + 0.1 * gauss(rng);
    GftDecomposition<Complex> dec = gft(GraphSignal<Complex>{s}, set, b, d);
    auto ranking = energy_ranking(dec);
    if (ranking.front().id == planted_id) ++hits;
  }
  check(hits >= 95, "planted component ranked first only " + std::to_string(hits) + "/100 times");

  // full file-based pipeline run under 30 s
  std::string graph_path = "/tmp/jsgft_acceptance_graph.csv";
  std::string signal_path = "/tmp/jsgft_acceptance_signal.csv";
  {
    std::ofstream out(graph_path);
    out << "# nodes=" << n << "\nsrc,dst,weight\n";
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(g.adjacency(i, j)) > 0.0)
          out << (j + 1) << ',' << (i + 1) << ',' << format_double(g.adjacency(i, j).real())
              << '\n';
    std::ofstream sig(signal_path);
    sig << "node,value\n";
    for (std::size_t i = 0; i < n; ++i)
      sig << (i + 1) << ',' << format_double(10.0 * v[i].real() + 0.1 * gauss(rng)) << '\n';
  }
  AnalysisConfig cfg;  // float backend defaults
  auto start = std::chrono::steady_clock::now();
  PipelineResult result = run_pipeline(cfg, graph_path, signal_path);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::remove(graph_path.c_str());
  std::remove(signal_path.c_str());
  check(elapsed < 30.0,
        "pipeline took " + std::to_string(elapsed) + " s on the 200-node graph");
  check(result.exit_code == 0, "pipeline reported a conformance failure");
}

}  // namespace

int main() {
  std::vector<Outcome> outcomes;
  outcomes.push_back(timed("nilpotent 3x3 single-chain fidelity", [](Check& c) {
    criterion1(c);
  }));
  if (outcomes.back().seconds >= 1.0) {
    outcomes.back().pass = false;
    outcomes.back().detail = "exceeded the 1 s budget";
  }
  outcomes.push_back(timed("projector algebra on 100 planted matrices, both backends", [](Check& c) {
    criterion2(c);
  }));
  if (outcomes.back().seconds >= 60.0) {
    outcomes.back().pass = false;
    outcomes.back().detail = "exceeded the 60 s budget";
  }
  outcomes.push_back(timed("GFT round trip + Parseval + energy additivity", [](Check& c) {
    criterion3(c);
  }));
  outcomes.push_back(timed("basis invariance under chain regeneration", [](Check& c) {
    criterion4(c);
  }));
  outcomes.push_back(timed("total variation: three forms, bound, attainment", [](Check& c) {
    criterion5(c);
  }));
  outcomes.push_back(timed("DSP consistency on directed cycles", [](Check& c) {
    criterion6(c);
  }));
  outcomes.push_back(timed("synthetic 200-node energy-ranking analogue", [](Check& c) {
    criterion7(c);
  }));

  bool all_pass = true;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    all_pass = all_pass && o.pass;
    std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                o.name.c_str(), o.seconds, o.detail.empty() ? "" : " — ", o.detail.c_str());
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
