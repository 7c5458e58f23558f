#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsgft/io.hpp"
#include "jsgft/report.hpp"

namespace jsgft {

enum class PipelineStage { decompose, gft, tv, check };

struct AnalysisConfig {
  enum class Backend { exact, floating };
  enum class Format { json, csv };

  Backend backend = Backend::floating;
  double eps_zero = kDefaultEpsZero;
  double eps_cluster = kDefaultEpsCluster;
  // "auto" follows the backend; "supplied" reads spectrum_path.
  std::string eigenvalue_mode = "auto";
  std::string spectrum_path;
  bool tv_normalized_shift = false;
  Format format = Format::json;
  GraphFileFormat graph_format = GraphFileFormat::auto_detect;
  std::optional<std::size_t> nodes_override;
};

// Throws InvalidConfig on bad combinations (tolerances must be positive;
// spectrum file is required iff eigenvalue_mode == "supplied").
void validate_config(const AnalysisConfig& cfg);

AnalysisConfig load_config(const std::string& path);

struct PipelineResult {
  DecompositionReport report;
  std::string rendered;  // report in the requested format (check: text lines)
  std::vector<std::string> warnings;
  int exit_code = 0;  // 0, or 3 when a conformance residual exceeds tolerance
};

// Relative tolerance certified by float-backend reports; the exact backend
// requires residuals to be identically zero.
inline constexpr double kConformanceTol = 1e-8;

// decompose -> eigenstructure, projector residuals, TV table;
// gft        -> the above plus spectral components, energies, ranking;
// tv         -> TV-focused report;
// check      -> invariant suite only, rendered as pass/fail lines.
PipelineResult run_pipeline(const AnalysisConfig& cfg, const std::string& graph_path,
                            const std::string& signal_path = "",
                            PipelineStage stage = PipelineStage::gft);

}  // namespace jsgft
