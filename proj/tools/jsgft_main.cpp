#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jsgft/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string graph_path;
  std::string signal_path;
  std::string output_path;
  std::string backend;
  std::string format;
  std::string eigen_mode;
  std::string spectrum_path;
  std::string graph_format;
  double eps_zero = -1.0;
  double eps_cluster = -1.0;
  std::size_t nodes = 0;
  bool tv_normalized = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool signal_required) {
  cmd->add_option("--config", args.config_path, "JSON config file");
  cmd->add_option("--graph", args.graph_path, "adjacency file (Matrix Market or edge-list CSV)")
      ->required();
  auto* sig = cmd->add_option("--signal", args.signal_path, "signal CSV (node,value)");
  if (signal_required) sig->required();
  cmd->add_option("--output", args.output_path, "write the report here instead of stdout");
  cmd->add_option("--backend", args.backend, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--format", args.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--eigenvalues", args.eigen_mode, "auto|exact|float|supplied")
      ->check(CLI::IsMember({"auto", "exact", "float", "supplied"}));
  cmd->add_option("--spectrum", args.spectrum_path, "supplied-spectrum file");
  cmd->add_option("--graph-format", args.graph_format, "auto|matrix-market|edge-list-csv")
      ->check(CLI::IsMember({"auto", "matrix-market", "edge-list-csv"}));
  cmd->add_option("--eps-zero", args.eps_zero, "rank tolerance (relative to ||A||_1)");
  cmd->add_option("--eps-cluster", args.eps_cluster, "eigenvalue clustering tolerance");
  cmd->add_option("--nodes", args.nodes, "node count override for edge-list CSV");
  cmd->add_flag("--tv-normalized", args.tv_normalized,
                "compute total variation against the normalized shift A/|lambda_max|");
}

jsgft::AnalysisConfig resolve_config(const CommonArgs& args) {
  jsgft::AnalysisConfig cfg;
  if (!args.config_path.empty()) cfg = jsgft::load_config(args.config_path);
  if (!args.backend.empty())
    cfg.backend = args.backend == "exact" ? jsgft::AnalysisConfig::Backend::exact
                                          : jsgft::AnalysisConfig::Backend::floating;
  if (!args.format.empty())
    cfg.format = args.format == "csv" ? jsgft::AnalysisConfig::Format::csv
                                      : jsgft::AnalysisConfig::Format::json;
  if (!args.eigen_mode.empty()) cfg.eigenvalue_mode = args.eigen_mode;
  if (!args.spectrum_path.empty()) cfg.spectrum_path = args.spectrum_path;
  if (!args.graph_format.empty()) {
    if (args.graph_format == "matrix-market")
      cfg.graph_format = jsgft::GraphFileFormat::matrix_market;
    else if (args.graph_format == "edge-list-csv")
      cfg.graph_format = jsgft::GraphFileFormat::edge_list_csv;
    else
      cfg.graph_format = jsgft::GraphFileFormat::auto_detect;
  }
  if (args.eps_zero > 0.0) cfg.eps_zero = args.eps_zero;
  if (args.eps_cluster > 0.0) cfg.eps_cluster = args.eps_cluster;
  if (args.nodes > 0) cfg.nodes_override = args.nodes;
  if (args.tv_normalized) cfg.tv_normalized_shift = true;
  return cfg;
}

int run_stage(const CommonArgs& args, jsgft::PipelineStage stage) {
  jsgft::AnalysisConfig cfg = resolve_config(args);
  jsgft::PipelineResult result = jsgft::run_pipeline(cfg, args.graph_path, args.signal_path, stage);
  for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (args.output_path.empty()) {
    std::cout << result.rendered;
  } else {
    std::ofstream out(args.output_path);
    if (!out) {
      std::cerr << "error: cannot write '" << args.output_path << "'\n";
      return 2;
    }
    out << result.rendered;
  }
  if (result.exit_code != 0)
    std::cerr << "error: numerical conformance failure (see residuals)\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph Fourier transform over Jordan subspaces of directed-graph adjacency matrices"};
  app.require_subcommand(1);

  CommonArgs decompose_args, gft_args, tv_args, check_args;
  CLI::App* decompose =
      app.add_subcommand("decompose", "eigenstructure, Jordan subspaces, projector residuals, TV");
  add_common_options(decompose, decompose_args, false);
  CLI::App* do_gft =
      app.add_subcommand("gft", "full transform of a signal: components, energies, ranking");
  add_common_options(do_gft, gft_args, true);
  CLI::App* tv = app.add_subcommand("tv", "total-variation ordering of the spectral components");
  add_common_options(tv, tv_args, false);
  CLI::App* check = app.add_subcommand("check", "run only the invariant suite");
  add_common_options(check, check_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (decompose->parsed()) return run_stage(decompose_args, jsgft::PipelineStage::decompose);
    if (do_gft->parsed()) return run_stage(gft_args, jsgft::PipelineStage::gft);
    if (tv->parsed()) return run_stage(tv_args, jsgft::PipelineStage::tv);
    if (check->parsed()) return run_stage(check_args, jsgft::PipelineStage::check);
  } catch (const jsgft::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jsgft::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
