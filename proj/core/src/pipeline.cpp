#include "jsgft/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "jsgft/filters.hpp"
#include "jsgft/gft.hpp"
#include "jsgft/total_variation.hpp"

namespace jsgft {

void validate_config(const AnalysisConfig& cfg) {
  if (!(cfg.eps_zero > 0.0)) raise(Errc::invalid_config, "eps_zero must be positive");
  if (!(cfg.eps_cluster > 0.0)) raise(Errc::invalid_config, "eps_cluster must be positive");
  const std::string& m = cfg.eigenvalue_mode;
  if (m != "auto" && m != "exact" && m != "float" && m != "supplied")
    raise(Errc::invalid_config, "eigenvalue_mode must be auto|exact|float|supplied");
  if ((m == "supplied") != !cfg.spectrum_path.empty())
    raise(Errc::invalid_config,
          "a spectrum file is required exactly when eigenvalue_mode is 'supplied'");
  if (m == "exact" && cfg.backend != AnalysisConfig::Backend::exact)
    raise(Errc::invalid_config, "eigenvalue_mode 'exact' requires the exact backend");
  if (m == "float" && cfg.backend != AnalysisConfig::Backend::floating)
    raise(Errc::invalid_config, "eigenvalue_mode 'float' requires the float backend");
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, path + ": " + e.what());
  }
  AnalysisConfig cfg;
  try {
    if (j.contains("backend")) {
      std::string b = j["backend"].get<std::string>();
      if (b == "exact")
        cfg.backend = AnalysisConfig::Backend::exact;
      else if (b == "float")
        cfg.backend = AnalysisConfig::Backend::floating;
      else
        raise(Errc::invalid_config, "backend must be exact|float");
    }
    if (j.contains("eps_zero")) cfg.eps_zero = j["eps_zero"].get<double>();
    if (j.contains("eps_cluster")) cfg.eps_cluster = j["eps_cluster"].get<double>();
    if (j.contains("eigenvalue_mode")) cfg.eigenvalue_mode = j["eigenvalue_mode"].get<std::string>();
    if (j.contains("spectrum_file")) cfg.spectrum_path = j["spectrum_file"].get<std::string>();
    if (j.contains("tv_normalized_shift"))
      cfg.tv_normalized_shift = j["tv_normalized_shift"].get<bool>();
    if (j.contains("output_format")) {
      std::string f = j["output_format"].get<std::string>();
      if (f == "json")
        cfg.format = AnalysisConfig::Format::json;
      else if (f == "csv")
        cfg.format = AnalysisConfig::Format::csv;
      else
        raise(Errc::invalid_config, "output_format must be json|csv");
    }
    if (j.contains("graph_format")) {
      std::string f = j["graph_format"].get<std::string>();
      if (f == "auto")
        cfg.graph_format = GraphFileFormat::auto_detect;
      else if (f == "matrix-market")
        cfg.graph_format = GraphFileFormat::matrix_market;
      else if (f == "edge-list-csv")
        cfg.graph_format = GraphFileFormat::edge_list_csv;
      else
        raise(Errc::invalid_config, "graph_format must be auto|matrix-market|edge-list-csv");
    }
    if (j.contains("nodes")) cfg.nodes_override = j["nodes"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::invalid_config, path + ": " + e.what());
  }
  validate_config(cfg);
  return cfg;
}

namespace {

template <class S>
std::string scalar_string(const S& v) {
  return ScalarOps<S>::str(v);
}

// Max over checked pairs of ||P_ij P_kl - delta delta P_ij||_1. All pairs are
// checked up to kFullPairLimit subspaces; beyond that, diagonal pairs plus a
// seeded sample keep the report affordable at N ~ 200.
constexpr std::size_t kFullPairLimit = 32;
constexpr std::size_t kSampledPairs = 200;

template <class S>
void projector_algebra_residuals(const JordanBasis<S>& basis, const DualBasis<S>& dual,
                        ResidualReport& out) {
  const std::size_t m = basis.subspaces.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (m <= kFullPairLimit) {
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l) pairs.emplace_back(k, l);
  } else {
    out.projector_pairs_sampled = true;
    for (std::size_t k = 0; k < m; ++k) pairs.emplace_back(k, k);
    std::mt19937_64 rng(20260808);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t t = 0; t < kSampledPairs; ++t) {
      std::size_t k = pick(rng), l = pick(rng);
      if (k != l) pairs.emplace_back(k, l);
    }
  }
  double worst = 0.0;
  for (auto [k, l] : pairs)
    worst = std::max(worst, projector_product_residual(basis, dual, basis.subspaces[k],
                                                       basis.subspaces[l]));
  out.projector_products = worst;
  out.projector_pairs_checked = pairs.size();
}

// Z_i0 recomputed by the direct definition V 1_{a_i} V^{-1} and compared with
// the sum of the eigenvalue's projectors.
template <class S>
double component_matrix_residual(const JordanBasis<S>& basis, const DualBasis<S>& dual,
                                 const SpectralProjectorSet<S>& set) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.structure.eigenvalues.size(); ++i) {
    std::size_t begin = SIZE_MAX, end = 0;
    for (const SubspaceSpan& s : basis.subspaces) {
      if (s.id.eig != i) continue;
      begin = std::min(begin, s.col_begin);
      end = std::max(end, s.col_begin + s.dim);
    }
    if (begin == SIZE_MAX) continue;
    // Chains of one eigenvalue occupy contiguous columns.
    Matrix<S> v_cols = basis.v.columns(begin, end - begin);
    SubspaceSpan whole{{i, 0}, end - begin, begin};
    Matrix<S> z_direct = v_cols * dual.block_rows(whole);
    worst = std::max(worst, one_norm(z_direct - set.component_matrices[i]));
  }
  return worst;
}

template <class S>
AnalysisConfig::Backend backend_tag();
template <>
AnalysisConfig::Backend backend_tag<GaussianRational>() { return AnalysisConfig::Backend::exact; }
template <>
AnalysisConfig::Backend backend_tag<Complex>() { return AnalysisConfig::Backend::floating; }

struct CheckLine {
  std::string name;
  double value = 0.0;
  bool ok = false;
};

template <class S>
PipelineResult run_pipeline_impl(const AnalysisConfig& cfg, const std::string& graph_path,
                                 const std::string& signal_path, PipelineStage stage) {
  PipelineResult result;
  DecompositionReport& report = result.report;
  report.backend = backend_tag<S>() == AnalysisConfig::Backend::exact ? "exact" : "float";
  report.eigenvalue_mode = cfg.eigenvalue_mode;
  report.eps_zero = cfg.eps_zero;
  report.eps_cluster = cfg.eps_cluster;
  report.tv_normalized_shift = cfg.tv_normalized_shift;
  report.tolerance = ScalarOps<S>::exact ? 0.0 : kConformanceTol;

  Graph<S> graph = load_adjacency<S>(graph_path, cfg.graph_format, cfg.nodes_override);
  report.nodes = graph.node_count();
  report.edges = graph.edge_count();

  EigenvalueOptions<S> eopt;
  eopt.eps_zero = cfg.eps_zero;
  eopt.eps_cluster = cfg.eps_cluster;
  if (cfg.eigenvalue_mode == "supplied") {
    eopt.mode = EigenvalueMode::supplied;
    eopt.supplied = load_spectrum<S>(cfg.spectrum_path);
  }

  JordanBasis<S> basis = jordan_decomposition(graph.adjacency, eopt);
  DualBasis<S> dual = dual_basis(basis);
  SpectralProjectorSet<S> set = make_projector_set(basis, dual);

  for (const auto& info : basis.structure.eigenvalues) {
    EigenvalueReport er;
    er.lambda = scalar_string(info.value);
    Complex lc = ScalarOps<S>::to_complex(info.value);
    er.lambda_re = lc.real();
    er.lambda_im = lc.imag();
    er.algebraic = info.algebraic;
    er.geometric = info.geometric;
    er.index = info.index;
    er.partial_multiplicities = info.partial_multiplicities;
    report.eigenvalues.push_back(std::move(er));
  }

  // TV runs against the normalized shift when requested; the basis transform
  // keeps subspace ids aligned with the energy table.
  Graph<S> tv_graph = graph;
  JordanBasis<S> tv_basis = basis;
  if (cfg.tv_normalized_shift) {
    S radius = spectral_radius_value(basis.structure, cfg.eps_cluster);
    tv_graph = scale_adjacency(graph, ScalarOps<S>::one() / radius);
    tv_basis = scale_shift_basis(basis, ScalarOps<S>::one() / radius);
  }
  std::vector<TvEntry> tv_entries = tv_ordering(tv_graph, tv_basis);

  double tv_disagreement = 0.0;
  {
    JordanBasis<S> normalized = normalize_chains(tv_basis);
    for (const SubspaceSpan& s : normalized.subspaces) {
      TvForms f = detail::component_tv_forms_normalized(tv_graph.adjacency, normalized, s.id);
      double hi = std::max({f.direct, f.factored, f.chain_max});
      double lo = std::min({f.direct, f.factored, f.chain_max});
      tv_disagreement = std::max(tv_disagreement, (hi - lo) / std::max(1.0, hi));
    }
  }

  std::optional<GftDecomposition<S>> decomposition;
  if (!signal_path.empty()) {
    GraphSignal<S> signal = load_signal<S>(signal_path, graph.node_count(), &result.warnings);
    decomposition = gft(signal, set, basis, dual);
  }

  for (const SubspaceSpan& s : basis.subspaces) {
    SubspaceReport sr;
    sr.id = s.id.str();
    sr.eig_index = s.id.eig;
    sr.chain_index = s.id.chain;
    sr.dim = s.dim;
    Complex lc = ScalarOps<S>::to_complex(basis.eigen_info(s.id.eig).value);
    sr.lambda_re = lc.real();
    sr.lambda_im = lc.imag();
    for (const TvEntry& e : tv_entries) {
      if (!(e.id == s.id)) continue;
      sr.tv = e.tv;
      sr.tv_bound = e.bound;
      sr.tv_bound_satisfied = e.bound_satisfied;
    }
    if (decomposition) {
      const auto& comp = decomposition->component(s.id);
      sr.has_energy = true;
      sr.energy = scalar_string(comp.energy);
      Complex ec = ScalarOps<S>::to_complex(comp.energy);
      sr.energy_re = ec.real();
      sr.energy_im = ec.imag();
      sr.energy_magnitude = std::abs(ec);
      double total = ScalarOps<S>::abs(decomposition->total_energy);
      sr.energy_fraction = total > 0.0 ? sr.energy_magnitude / total : 0.0;
    }
    report.subspaces.push_back(std::move(sr));
  }
  for (const TvEntry& e : tv_entries) report.tv_order.push_back(e.id.str());

  // Residuals, recomputed from scratch so the report certifies conformance.
  ResidualReport& res = report.residuals;
  res.av_vj =
      jordan_residual(basis.a, basis.v, basis.j) / std::max(1.0, one_norm(basis.a) * one_norm(basis.v));
  res.biorthogonality = one_norm(dual.w.conjugate_transpose() * basis.v -
                                 Matrix<S>::identity(graph.node_count()));
  projector_algebra_residuals(basis, dual, res);
  res.component_matrix_sum = component_matrix_residual(basis, dual, set);
  {
    Matrix<S> sum(graph.node_count(), graph.node_count());
    for (const auto& p : set.projectors) sum = sum + p;
    res.resolution_identity = one_norm(sum - Matrix<S>::identity(graph.node_count()));
  }
  res.tv_forms_disagreement = tv_disagreement;

  if (decomposition) {
    const auto& d = *decomposition;
    GraphSignal<S> round_trip = inverse_gft(d);
    res.reconstruction =
        one_norm(d.signal - round_trip.values) / std::max(1.0, one_norm(d.signal));
    auto [direct, paired] = parseval_pairing(GraphSignal<S>{d.signal}, GraphSignal<S>{d.signal},
                                             basis, dual);
    double total = ScalarOps<S>::abs(d.total_energy);
    res.parseval = ScalarOps<S>::abs(direct - paired) / std::max(1.0, total);
    S energy_sum = ScalarOps<S>::zero();
    for (const auto& c : d.components) energy_sum += c.energy;
    res.energy_additivity = ScalarOps<S>::abs(energy_sum - d.total_energy) / std::max(1.0, total);

    SignalReport sig;
    sig.energy = scalar_string(d.total_energy);
    sig.energy_value = total;
    sig.tv = signal_tv(tv_graph, GraphSignal<S>{d.signal});
    if (total > 0.0)
      for (const EnergyRank& r : energy_ranking(d)) sig.ranking.push_back(r.id.str());
    report.signal = std::move(sig);
  }

  // Conformance: every residual within tolerance and every TV bound holds.
  const double tol = report.tolerance;
  std::vector<CheckLine> checks;
  checks.push_back({"A V = V J", res.av_vj, res.av_vj <= tol});
  checks.push_back({"W^H V = I", res.biorthogonality, res.biorthogonality <= tol});
  checks.push_back({"projector products P_ij P_kl", res.projector_products,
                    res.projector_products <= tol});
  checks.push_back({"component matrix sums", res.component_matrix_sum,
                    res.component_matrix_sum <= tol});
  checks.push_back({"resolution of identity", res.resolution_identity,
                    res.resolution_identity <= tol});
  checks.push_back({"tv three-form agreement", res.tv_forms_disagreement,
                    res.tv_forms_disagreement <= std::max(tol, kConformanceTol)});
  bool tv_bounds_ok = true;
  for (const auto& s : report.subspaces) tv_bounds_ok = tv_bounds_ok && s.tv_bound_satisfied;
  checks.push_back({"tv bound |1-lambda|+1", 0.0, tv_bounds_ok});
  if (res.reconstruction)
    checks.push_back({"gft reconstruction", *res.reconstruction, *res.reconstruction <= tol});
  if (res.parseval) checks.push_back({"parseval pairing", *res.parseval, *res.parseval <= tol});
  if (res.energy_additivity)
    checks.push_back(
        {"energy additivity", *res.energy_additivity, *res.energy_additivity <= tol});

  report.conformant = true;
  for (const auto& c : checks) report.conformant = report.conformant && c.ok;
  result.exit_code = report.conformant ? 0 : 3;

  if (stage == PipelineStage::check) {
    std::ostringstream os;
    for (const auto& c : checks)
      os << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << " (residual " << format_double(c.value)
         << ")\n";
    os << (report.conformant ? "all invariants hold\n" : "invariant failures detected\n");
    result.rendered = os.str();
    return result;
  }

  if (stage == PipelineStage::tv && cfg.format == AnalysisConfig::Format::csv)
    result.rendered = to_tv_csv(report);
  else if (cfg.format == AnalysisConfig::Format::csv)
    result.rendered = to_csv(report);
  else
    result.rendered = to_json(report);
  return result;
}

}  // namespace

PipelineResult run_pipeline(const AnalysisConfig& cfg, const std::string& graph_path,
                            const std::string& signal_path, PipelineStage stage) {
  validate_config(cfg);
  if (stage == PipelineStage::gft && signal_path.empty())
    raise(Errc::invalid_config, "the gft stage requires a signal file");
  if (cfg.backend == AnalysisConfig::Backend::exact)
    return run_pipeline_impl<GaussianRational>(cfg, graph_path, signal_path, stage);
  return run_pipeline_impl<Complex>(cfg, graph_path, signal_path, stage);
}

}  // namespace jsgft
