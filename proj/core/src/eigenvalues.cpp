#include "jsgft/eigenvalues.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace jsgft {

std::vector<mpq_class> rational_candidates(double x, unsigned long max_den, double max_err) {
  std::vector<mpq_class> out;
  if (!std::isfinite(x)) return out;
  // h_k / l_k are the convergents of the continued fraction of x;
  // h_{-1} = 1, h_{-2} = 0, l_{-1} = 0, l_{-2} = 1.
  mpz_class h_prev(0), h(1), l_prev(1), l(0);
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(rest);
    if (fl > 9e18 || fl < -9e18) break;
    mpz_class a(static_cast<long>(fl));
    mpz_class h_next = a * h + h_prev;
    mpz_class l_next = a * l + l_prev;
    h_prev = h;
    h = h_next;
    l_prev = l;
    l = l_next;
    if (l > max_den) break;
    mpq_class conv(h, l);
    conv.canonicalize();
    if (std::abs(conv.get_d() - x) <= max_err) out.push_back(conv);
    double frac = rest - fl;
    if (frac < 1e-18) break;
    rest = 1.0 / frac;
  }
  std::sort(out.begin(), out.end(), [&](const mpq_class& a, const mpq_class& b) {
    return std::abs(a.get_d() - x) < std::abs(b.get_d() - x);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > 12) out.resize(12);
  return out;
}

namespace detail {

std::vector<std::pair<Complex, std::size_t>> cluster_eigenvalues(std::vector<Complex> roots,
                                                                 double eps_cluster) {
  struct Cluster {
    Complex sum;
    std::size_t count;
    Complex mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  clusters.reserve(roots.size());
  for (Complex r : roots) clusters.push_back({r, 1});

  // Single-linkage merge on cluster means until all pairs are separated by
  // more than 2*eps_cluster.
  while (clusters.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double d = std::abs(clusters[i].mean() - clusters[j].mean());
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    if (best > 2.0 * eps_cluster) break;
    clusters[bi].sum += clusters[bj].sum;
    clusters[bi].count += clusters[bj].count;
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  std::vector<std::pair<Complex, std::size_t>> out;
  out.reserve(clusters.size());
  for (const Cluster& c : clusters) out.emplace_back(c.mean(), c.count);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

}  // namespace detail

namespace {

bool gq_less(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re(), b.re());
  if (c != 0) return c < 0;
  return cmp(a.im(), b.im()) < 0;
}

// Gaussian-rational root extraction: candidates come from the numerically
// computed spectrum, get rationalized by continued fractions, and are
// accepted only on exact verification against the characteristic polynomial.
std::vector<EigenvalueEntry<GaussianRational>> exact_spectrum(const Matrix<GaussianRational>& a) {
  std::vector<GaussianRational> charpoly = characteristic_polynomial(a);
  std::vector<Complex> numeric = dense_eigenvalues(to_complex_matrix(a));

  std::vector<GaussianRational> candidates;
  std::set<std::string> seen;
  for (Complex z : numeric) {
    for (const mpq_class& re : rational_candidates(z.real()))
      for (const mpq_class& im : rational_candidates(z.imag())) {
        GaussianRational cand(re, im);
        if (seen.insert(cand.str()).second) candidates.push_back(cand);
      }
  }
  std::sort(candidates.begin(), candidates.end(), gq_less);

  std::vector<EigenvalueEntry<GaussianRational>> found;
  std::vector<GaussianRational> p = charpoly;
  for (const GaussianRational& cand : candidates) {
    if (p.size() == 1) break;
    std::size_t mult = detail::deflate_root(p, cand);
    if (mult > 0) found.push_back({cand, mult});
  }
  if (p.size() > 1)
    raise(Errc::irrational_spectrum,
          "characteristic polynomial has roots outside the Gaussian rationals "
          "(or with denominators too large to recover); remaining degree " +
              std::to_string(p.size() - 1));
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return gq_less(x.value, y.value); });
  return found;
}

std::vector<EigenvalueEntry<GaussianRational>> exact_supplied(
    const Matrix<GaussianRational>& a, const std::vector<GaussianRational>& supplied) {
  std::vector<GaussianRational> p = characteristic_polynomial(a);
  std::vector<EigenvalueEntry<GaussianRational>> out;
  std::set<std::string> seen;
  for (const GaussianRational& s : supplied) {
    if (!seen.insert(s.str()).second) continue;  // collapse duplicates
    std::size_t mult = detail::deflate_root(p, s);
    if (mult == 0)
      raise(Errc::bad_supplied_spectrum,
            "supplied value " + s.str() + " does not annihilate the characteristic polynomial");
    out.push_back({s, mult});
  }
  if (p.size() > 1)
    raise(Errc::bad_supplied_spectrum,
          "supplied spectrum does not cover every eigenvalue; remaining degree " +
              std::to_string(p.size() - 1));
  return out;
}

std::vector<EigenvalueEntry<Complex>> float_spectrum(const Matrix<Complex>& a, double eps_cluster) {
  auto clusters = detail::cluster_eigenvalues(dense_eigenvalues(a), eps_cluster);
  std::vector<EigenvalueEntry<Complex>> out;
  out.reserve(clusters.size());
  for (const auto& [mean, count] : clusters) out.push_back({mean, count});
  return out;
}

std::vector<EigenvalueEntry<Complex>> float_supplied(const Matrix<Complex>& a,
                                                     const std::vector<Complex>& supplied,
                                                     double eps_cluster) {
  // Collapse duplicate supplied values (within 2*eps_cluster) keeping order.
  std::vector<Complex> distinct;
  for (Complex s : supplied) {
    bool dup = false;
    for (Complex d : distinct)
      if (std::abs(s - d) <= 2.0 * eps_cluster) dup = true;
    if (!dup) distinct.push_back(s);
  }
  if (distinct.empty()) raise(Errc::bad_supplied_spectrum, "supplied spectrum is empty");

  auto clusters = detail::cluster_eigenvalues(dense_eigenvalues(a), eps_cluster);
  std::vector<std::size_t> claim(clusters.size(), SIZE_MAX);
  for (std::size_t s = 0; s < distinct.size(); ++s) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = SIZE_MAX;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      double d = std::abs(distinct[s] - clusters[c].first);
      if (d < best) {
        best = d;
        best_c = c;
      }
    }
    if (best_c == SIZE_MAX || best > 2.0 * eps_cluster)
      raise(Errc::bad_supplied_spectrum,
            "supplied value " + ScalarOps<Complex>::str(distinct[s]) +
                " is not within 2*eps_cluster of any computed eigenvalue");
    if (claim[best_c] != SIZE_MAX)
      raise(Errc::bad_supplied_spectrum, "two supplied values claim the same eigenvalue cluster");
    claim[best_c] = s;
  }
  for (std::size_t c = 0; c < clusters.size(); ++c)
    if (claim[c] == SIZE_MAX)
      raise(Errc::bad_supplied_spectrum,
            "computed eigenvalue near " + ScalarOps<Complex>::str(clusters[c].first) +
                " is missing from the supplied spectrum");

  std::vector<EigenvalueEntry<Complex>> out(distinct.size());
  for (std::size_t c = 0; c < clusters.size(); ++c)
    out[claim[c]] = {distinct[claim[c]], clusters[c].second};
  return out;
}

}  // namespace

std::vector<EigenvalueEntry<GaussianRational>> find_eigenvalues(
    const Matrix<GaussianRational>& a, const EigenvalueOptions<GaussianRational>& opt) {
  if (!a.square()) raise(Errc::dimension_mismatch, "eigenvalues of non-square matrix");
  if (a.rows() == 0) return {};
  switch (opt.mode) {
    case EigenvalueMode::floating:
      raise(Errc::invalid_config, "floating eigenvalue mode requires the float backend");
    case EigenvalueMode::supplied:
      return exact_supplied(a, opt.supplied);
    default:
      return exact_spectrum(a);
  }
}

std::vector<EigenvalueEntry<Complex>> find_eigenvalues(const Matrix<Complex>& a,
                                                       const EigenvalueOptions<Complex>& opt) {
  if (!a.square()) raise(Errc::dimension_mismatch, "eigenvalues of non-square matrix");
  if (a.rows() == 0) return {};
  switch (opt.mode) {
    case EigenvalueMode::exact:
      raise(Errc::invalid_config, "exact eigenvalue mode requires the exact backend");
    case EigenvalueMode::supplied:
      return float_supplied(a, opt.supplied, opt.eps_cluster);
    default:
      return float_spectrum(a, opt.eps_cluster);
  }
}

}  // namespace jsgft
