#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jsgft {

// Serialization-ready view of a full analysis. Exact-backend values carry
// their rational string forms next to the double renderings; residuals are
// always recomputed from the matrices, never copied from intermediate state.

struct EigenvalueReport {
  std::string lambda;  // exact string ("3/2+1/4i") or shortest double form
  double lambda_re = 0.0, lambda_im = 0.0;
  std::size_t algebraic = 0, geometric = 0, index = 0;
  std::vector<std::size_t> partial_multiplicities;
};

struct SubspaceReport {
  std::string id;  // "<eigenvalue index>.<chain index>", 1-based
  std::size_t eig_index = 0, chain_index = 0, dim = 0;
  double lambda_re = 0.0, lambda_im = 0.0;
  bool has_energy = false;
  std::string energy;  // exact string when available
  double energy_re = 0.0, energy_im = 0.0;
  double energy_magnitude = 0.0, energy_fraction = 0.0;
  double tv = 0.0, tv_bound = 0.0;
  bool tv_bound_satisfied = false;
};

struct ResidualReport {
  double av_vj = 0.0;             // ||A V - V J||_1 / max(1, ||A||_1 ||V||_1)
  double biorthogonality = 0.0;   // ||W^H V - I||_1
  double projector_products = 0.0;  // max ||P_ij P_kl - dd P_ij||_1 over checked pairs
  std::size_t projector_pairs_checked = 0;
  bool projector_pairs_sampled = false;
  double component_matrix_sum = 0.0;  // max_i ||sum_j P_ij - V 1_i V^{-1}||_1
  double resolution_identity = 0.0;  // ||sum P_ij - I||_1
  double tv_forms_disagreement = 0.0;  // max relative spread of the three TV formulas
  std::optional<double> reconstruction;    // ||s - sum s_hat||_1 / max(1, ||s||_1)
  std::optional<double> parseval;          // |<s,s> - <s_V, s_W>| / max(1, ||s||^2)
  std::optional<double> energy_additivity; // |sum energies - <s,s>| / max(1, ||s||^2)
};

struct SignalReport {
  std::string energy;  // <s,s> as exact string or double form
  double energy_value = 0.0;
  double tv = 0.0;
  std::vector<std::string> ranking;  // subspace ids, best energy first
};

struct DecompositionReport {
  std::string backend;  // "exact" | "float"
  std::string eigenvalue_mode;
  double eps_zero = 0.0, eps_cluster = 0.0;
  bool tv_normalized_shift = false;
  std::size_t nodes = 0, edges = 0;
  std::vector<EigenvalueReport> eigenvalues;
  std::vector<SubspaceReport> subspaces;    // in basis (column) order
  std::vector<std::string> tv_order;        // subspace ids, ascending tv
  std::optional<SignalReport> signal;
  ResidualReport residuals;
  double tolerance = 0.0;  // conformance tolerance applied (0 = exact)
  bool conformant = false;
};

std::string to_json(const DecompositionReport& report);

// Plot-ready table, one row per subspace:
// id,lambda_re,lambda_im,r,energy_re,energy_im,energy_frac,tv,tv_bound.
// Energy cells are empty when no signal was supplied.
std::string to_csv(const DecompositionReport& report);

// TV-focused table: id,lambda_re,lambda_im,r,tv,tv_bound,bound_satisfied.
std::string to_tv_csv(const DecompositionReport& report);

std::string format_double(double v);

}  // namespace jsgft
