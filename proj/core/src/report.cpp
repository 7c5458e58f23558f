#include "jsgft/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace jsgft {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json residuals_json(const ResidualReport& r) {
  ordered_json j;
  j["av_vj"] = r.av_vj;
  j["biorthogonality"] = r.biorthogonality;
  j["projector_products"] = r.projector_products;
  j["projector_pairs_checked"] = r.projector_pairs_checked;
  j["projector_pairs_sampled"] = r.projector_pairs_sampled;
  j["component_matrix_sum"] = r.component_matrix_sum;
  j["resolution_identity"] = r.resolution_identity;
  j["tv_forms_disagreement"] = r.tv_forms_disagreement;
  if (r.reconstruction) j["reconstruction"] = *r.reconstruction;
  if (r.parseval) j["parseval"] = *r.parseval;
  if (r.energy_additivity) j["energy_additivity"] = *r.energy_additivity;
  return j;
}

}  // namespace

std::string to_json(const DecompositionReport& report) {
  ordered_json j;
  j["config"] = {{"backend", report.backend},
                 {"eigenvalue_mode", report.eigenvalue_mode},
                 {"eps_zero", report.eps_zero},
                 {"eps_cluster", report.eps_cluster},
                 {"tv_normalized_shift", report.tv_normalized_shift}};
  j["graph"] = {{"nodes", report.nodes}, {"edges", report.edges}};

  ordered_json evs = ordered_json::array();
  for (const auto& e : report.eigenvalues) {
    ordered_json ev;
    ev["lambda"] = e.lambda;
    ev["lambda_re"] = e.lambda_re;
    ev["lambda_im"] = e.lambda_im;
    ev["algebraic"] = e.algebraic;
    ev["geometric"] = e.geometric;
    ev["index"] = e.index;
    ev["partial_multiplicities"] = e.partial_multiplicities;
    evs.push_back(std::move(ev));
  }
  j["eigenvalues"] = std::move(evs);

  ordered_json subs = ordered_json::array();
  for (const auto& s : report.subspaces) {
    ordered_json o;
    o["id"] = s.id;
    o["lambda_re"] = s.lambda_re;
    o["lambda_im"] = s.lambda_im;
    o["r"] = s.dim;
    if (s.has_energy) {
      o["energy"] = s.energy;
      o["energy_re"] = s.energy_re;
      o["energy_im"] = s.energy_im;
      o["energy_magnitude"] = s.energy_magnitude;
      o["energy_fraction"] = s.energy_fraction;
    }
    o["tv"] = s.tv;
    o["tv_bound"] = s.tv_bound;
    o["tv_bound_satisfied"] = s.tv_bound_satisfied;
    subs.push_back(std::move(o));
  }
  j["subspaces"] = std::move(subs);
  j["tv_order"] = report.tv_order;

  if (report.signal) {
    j["signal"] = {{"energy", report.signal->energy},
                   {"energy_value", report.signal->energy_value},
                   {"tv", report.signal->tv},
                   {"energy_ranking", report.signal->ranking}};
  }
  j["residuals"] = residuals_json(report.residuals);
  j["conformance"] = {{"tolerance", report.tolerance}, {"pass", report.conformant}};
  return j.dump(2) + "\n";
}

std::string to_csv(const DecompositionReport& report) {
  std::ostringstream os;
  os << "id,lambda_re,lambda_im,r,energy_re,energy_im,energy_frac,tv,tv_bound\n";
  for (const auto& s : report.subspaces) {
    os << s.id << ',' << format_double(s.lambda_re) << ',' << format_double(s.lambda_im) << ','
       << s.dim << ',';
    if (s.has_energy)
      os << format_double(s.energy_re) << ',' << format_double(s.energy_im) << ','
         << format_double(s.energy_fraction);
    else
      os << ",,";
    os << ',' << format_double(s.tv) << ',' << format_double(s.tv_bound) << '\n';
  }
  return os.str();
}

std::string to_tv_csv(const DecompositionReport& report) {
  std::ostringstream os;
  os << "id,lambda_re,lambda_im,r,tv,tv_bound,bound_satisfied\n";
  // Rows follow the TV ordering (ascending, low frequency first).
  for (const std::string& id : report.tv_order) {
    for (const auto& s : report.subspaces) {
      if (s.id != id) continue;
      os << s.id << ',' << format_double(s.lambda_re) << ',' << format_double(s.lambda_im) << ','
         << s.dim << ',' << format_double(s.tv) << ',' << format_double(s.tv_bound) << ','
         << (s.tv_bound_satisfied ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

}  // namespace jsgft
