#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jsgft/eigenvalues.hpp"
#include "jsgft/graph.hpp"
#include "jsgft/linalg.hpp"

namespace jsgft {

template <class S>
struct EigenvalueInfo {
  S value;
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
  std::size_t index = 0;
  std::vector<std::size_t> partial_multiplicities;  // weakly decreasing
};

template <class S>
struct Eigenstructure {
  std::vector<EigenvalueInfo<S>> eigenvalues;
  std::size_t dimension = 0;
};

struct JordanSubspaceId {
  std::size_t eig = 0;    // index into Eigenstructure::eigenvalues
  std::size_t chain = 0;  // chain within the eigenvalue, longest first

  friend bool operator==(const JordanSubspaceId& a, const JordanSubspaceId& b) {
    return a.eig == b.eig && a.chain == b.chain;
  }
  friend bool operator<(const JordanSubspaceId& a, const JordanSubspaceId& b) {
    if (a.eig != b.eig) return a.eig < b.eig;
    return a.chain < b.chain;
  }
  std::string str() const { return std::to_string(eig + 1) + "." + std::to_string(chain + 1); }
};

struct SubspaceSpan {
  JordanSubspaceId id;
  std::size_t dim = 0;
  std::size_t col_begin = 0;  // column range [col_begin, col_begin + dim) in V
};

// Jordan decomposition A = V J V^{-1} with V partitioned into chain blocks.
template <class S>
struct JordanBasis {
  Matrix<S> a;
  Matrix<S> v;
  Matrix<S> j;
  Eigenstructure<S> structure;
  std::vector<SubspaceSpan> subspaces;
  double eps_zero = kDefaultEpsZero;

  const SubspaceSpan& span_of(JordanSubspaceId id) const {
    for (const SubspaceSpan& s : subspaces)
      if (s.id == id) return s;
    raise(Errc::unknown_subspace, "no Jordan subspace " + id.str());
  }

  const EigenvalueInfo<S>& eigen_info(std::size_t eig_index) const {
    if (eig_index >= structure.eigenvalues.size())
      raise(Errc::unknown_eigenvalue, "eigenvalue index " + std::to_string(eig_index + 1));
    return structure.eigenvalues[eig_index];
  }

  // V_ij, the N x r chain block spanning the subspace.
  Matrix<S> block(JordanSubspaceId id) const {
    const SubspaceSpan& s = span_of(id);
    return v.columns(s.col_begin, s.dim);
  }

  // J_ij: lambda on the diagonal, ones on the superdiagonal.
  Matrix<S> jordan_block(JordanSubspaceId id) const {
    const SubspaceSpan& s = span_of(id);
    Matrix<S> jb(s.dim, s.dim);
    const S& lambda = eigen_info(id.eig).value;
    for (std::size_t t = 0; t < s.dim; ++t) {
      jb.at(t, t) = lambda;
      if (t + 1 < s.dim) jb.at(t, t + 1) = ScalarOps<S>::one();
    }
    return jb;
  }
};

template <class S>
Matrix<S> shifted_matrix(const Matrix<S>& a, const S& lambda) {
  Matrix<S> m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = m(i, i) - lambda;
  return m;
}

namespace detail {
template <class S>
std::vector<std::vector<std::vector<S>>> nested_kernels(const Matrix<S>& shifted, double eps_zero,
                                                        std::size_t expected_algebraic);
}

// Basis of Ker(A - lambda I)^p, the generalized eigenspace of order p.
// p = 0 yields the empty basis of {0}.
template <class S>
std::vector<std::vector<S>> generalized_eigenspace(const Matrix<S>& a, const S& lambda,
                                                   std::size_t p,
                                                   double eps_zero = kDefaultEpsZero) {
  if (!a.square()) raise(Errc::dimension_mismatch, "generalized eigenspace of non-square matrix");
  if (p == 0) return {};
  auto kernels = detail::nested_kernels(shifted_matrix(a, lambda), eps_zero, 0);
  if (kernels.empty())
    raise(Errc::not_an_eigenvalue,
          "Ker(A - lambda I)^" + std::to_string(p) + " is trivial; lambda is not an eigenvalue");
  return p <= kernels.size() ? kernels[p - 1] : kernels.back();
}

namespace detail {

// Modified Gram-Schmidt with one re-orthogonalization pass. Inputs are
// assumed linearly independent.
inline std::vector<std::vector<Complex>> orthonormalize(
    const std::vector<std::vector<Complex>>& basis) {
  std::vector<std::vector<Complex>> q;
  q.reserve(basis.size());
  for (std::vector<Complex> v : basis) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : q) {
        Complex proj = inner(v, u);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
      }
    double norm = 0.0;
    for (const Complex& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (Complex& x : v) x /= norm;
    q.push_back(std::move(v));
  }
  return q;
}

// Nested kernels K_p of (A - lambda I). The exact backend takes explicit
// powers; the float backend iterates preimages, K_{p+1} =
// Ker((I - Q Q^H)(A - lambda I)) with Q an orthonormal basis of K_p, which
// stays conditioned like A - lambda I itself instead of like its powers.
template <class S>
std::vector<std::vector<std::vector<S>>> nested_kernels(const Matrix<S>& shifted, double eps_zero,
                                                        std::size_t expected_algebraic) {
  const std::size_t n = shifted.rows();
  std::vector<std::vector<std::vector<S>>> kernels;
  std::size_t prev_dim = 0;
  // Rank decisions throughout the iteration use the scale of A - lambda I,
  // not of the projected matrices, which approach zero at the top order.
  const double eps_abs = elimination_threshold(shifted, eps_zero);
  for (std::size_t p = 1; p <= n; ++p) {
    std::vector<std::vector<S>> basis;
    if constexpr (ScalarOps<S>::exact) {
      Matrix<S> power = shifted;
      for (std::size_t k = 1; k < p; ++k) power = power * shifted;
      basis = nullspace(power, eps_zero);
    } else {
      if (kernels.empty()) {
        basis = nullspace_abs(shifted, eps_abs);
      } else {
        auto q = orthonormalize(kernels.back());
        // M = (I - Q Q^H) shifted
        Matrix<S> m = shifted;
        for (const auto& u : q) {
          // subtract u (u^H shifted) row update
          std::vector<S> uh_s(n, ScalarOps<S>::zero());
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
              uh_s[j] += ScalarOps<S>::conj(u[i]) * shifted(i, j);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = m(i, j) - u[i] * uh_s[j];
        }
        basis = nullspace_abs(m, eps_abs);
      }
    }
    if (p == 1 && basis.empty())
      raise(Errc::not_an_eigenvalue, "lambda has a trivial eigenspace");
    if (basis.size() < prev_dim)
      raise(Errc::chain_defect,
            "kernel dimension decreased with the order; adjust eps_zero or switch backend");
    if (basis.size() == prev_dim) break;  // stabilized at p-1
    kernels.push_back(std::move(basis));
    prev_dim = kernels.back().size();
    if (expected_algebraic != 0 && prev_dim >= expected_algebraic) break;
  }
  if (expected_algebraic != 0 && prev_dim != expected_algebraic)
    raise(Errc::chain_defect,
          "generalized eigenspace stabilized at dimension " + std::to_string(prev_dim) +
              " but the algebraic multiplicity is " + std::to_string(expected_algebraic) +
              "; adjust eps_zero or switch backend");
  return kernels;
}

// Staircase chain construction for one eigenvalue: nested kernels
// K_p = Ker(A - lambda I)^p are computed top-down; order-p representatives are
// picked to be independent of K_{p-1} plus already-generated level-p vectors
// (first qualifying kernel basis vector wins), then propagated down by
// (A - lambda I).
template <class S>
std::vector<std::vector<std::vector<S>>> chains_for_eigenvalue(const Matrix<S>& a, const S& lambda,
                                                               double eps_zero,
                                                               std::size_t expected_algebraic) {
  Matrix<S> shifted = shifted_matrix(a, lambda);
  std::vector<std::vector<std::vector<S>>> kernels =
      nested_kernels(shifted, eps_zero, expected_algebraic);

  const std::size_t m = kernels.size();  // index of lambda
  auto kernel_dim = [&](std::size_t p) -> std::size_t {
    return p == 0 ? 0 : kernels[p - 1].size();
  };

  std::vector<std::vector<std::vector<S>>> chains;  // each chain v_1 first
  std::vector<std::vector<S>> level_vectors;        // level-p vectors of existing chains
  for (std::size_t p = m; p >= 1; --p) {
    const std::size_t want = kernel_dim(p) - kernel_dim(p - 1);  // chains of length >= p
    std::vector<std::vector<S>> context;
    if (p >= 2) context = kernels[p - 2];
    for (const auto& v : level_vectors) context.push_back(v);

    std::size_t have = level_vectors.size();
    Matrix<S> ctx = stack_columns(context);
    std::size_t base_rank = context.empty() ? 0 : rank(ctx, eps_zero);
    for (const auto& cand : kernels[p - 1]) {
      if (have >= want) break;
      std::vector<std::vector<S>> trial = context;
      trial.push_back(cand);
      if (rank(stack_columns(trial), eps_zero) > base_rank) {
        context = std::move(trial);
        base_rank += 1;
        ++have;
        // Build the chain: top = cand, then map down by (A - lambda I).
        std::vector<std::vector<S>> chain;
        chain.push_back(cand);
        for (std::size_t q = p; q >= 2; --q) chain.push_back(shifted * chain.back());
        std::reverse(chain.begin(), chain.end());  // v_1 first
        chains.push_back(std::move(chain));
      }
    }
    if (have < want)
      raise(Errc::chain_defect,
            "could not select " + std::to_string(want) + " independent order-" + std::to_string(p) +
                " generalized eigenvectors; adjust eps_zero or switch backend");
    // Descend: level-(p-1) vectors of all current chains.
    level_vectors.clear();
    if (p >= 2)
      for (const auto& chain : chains) level_vectors.push_back(chain[p - 2]);
  }

  std::stable_sort(chains.begin(), chains.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return chains;
}

}  // namespace detail

// Jordan chains of one eigenvalue, longest first. Each chain (v_1, ..., v_r)
// satisfies A v_1 = lambda v_1 and A v_p = lambda v_p + v_{p-1}.
template <class S>
std::vector<std::vector<std::vector<S>>> jordan_chains(const Matrix<S>& a, const S& lambda,
                                                       double eps_zero = kDefaultEpsZero) {
  if (!a.square()) raise(Errc::dimension_mismatch, "jordan chains of non-square matrix");
  return detail::chains_for_eigenvalue(a, lambda, eps_zero, 0);
}

template <class S>
double jordan_residual(const Matrix<S>& a, const Matrix<S>& v, const Matrix<S>& j) {
  return one_norm(a * v - v * j);
}

namespace detail {

template <class S>
void assemble_from_chains(JordanBasis<S>& basis,
                          const std::vector<std::vector<std::vector<std::vector<S>>>>& all_chains) {
  const std::size_t n = basis.a.rows();
  basis.v = Matrix<S>(n, n);
  basis.j = Matrix<S>(n, n);
  basis.subspaces.clear();
  std::size_t col = 0;
  for (std::size_t i = 0; i < all_chains.size(); ++i) {
    const S& lambda = basis.structure.eigenvalues[i].value;
    for (std::size_t c = 0; c < all_chains[i].size(); ++c) {
      const auto& chain = all_chains[i][c];
      basis.subspaces.push_back({{i, c}, chain.size(), col});
      for (std::size_t t = 0; t < chain.size(); ++t) {
        if (chain[t].size() != n) raise(Errc::chain_defect, "chain vector has wrong length");
        for (std::size_t r = 0; r < n; ++r) basis.v.at(r, col) = chain[t][r];
        basis.j.at(col, col) = lambda;
        if (t + 1 < chain.size()) basis.j.at(col, col + 1) = ScalarOps<S>::one();
        ++col;
      }
    }
  }
  if (col != n) raise(Errc::chain_defect, "chains tile " + std::to_string(col) + " of " +
                                              std::to_string(n) + " columns");
}

}  // namespace detail

// Full Jordan decomposition. Blocks are ordered by eigenvalue discovery order
// (ascending by real then imaginary part for computed spectra, user order for
// supplied ones), then by decreasing chain length.
template <class S>
JordanBasis<S> jordan_decomposition(const Matrix<S>& a,
                                    const EigenvalueOptions<S>& opt = {}) {
  if (!a.square()) raise(Errc::dimension_mismatch, "jordan decomposition of non-square matrix");
  const std::size_t n = a.rows();
  auto eigenvalues = find_eigenvalues(a, opt);

  JordanBasis<S> basis;
  basis.a = a;
  basis.eps_zero = opt.eps_zero;
  basis.structure.dimension = n;

  std::vector<std::vector<std::vector<std::vector<S>>>> all_chains;
  for (const auto& entry : eigenvalues) {
    auto chains = detail::chains_for_eigenvalue(a, entry.value, opt.eps_zero, entry.algebraic);
    EigenvalueInfo<S> info;
    info.value = entry.value;
    info.algebraic = entry.algebraic;
    info.geometric = chains.size();
    info.index = chains.empty() ? 0 : chains.front().size();
    for (const auto& chain : chains) info.partial_multiplicities.push_back(chain.size());
    basis.structure.eigenvalues.push_back(std::move(info));
    all_chains.push_back(std::move(chains));
  }

  detail::assemble_from_chains(basis, all_chains);
  if (rank(basis.v, opt.eps_zero) != n)
    raise(Errc::chain_defect,
          "computed chains are not linearly independent at the configured tolerance");
  return basis;
}

// Builds a JordanBasis around an externally supplied eigenvector matrix V,
// validating A V = V J (exact equality on the exact backend, relative
// tolerance on the float backend) and nonsingularity of V.
template <class S>
JordanBasis<S> make_jordan_basis(Matrix<S> a, Matrix<S> v, Eigenstructure<S> structure,
                                 double eps_zero = kDefaultEpsZero, double tol_rel = 1e-8) {
  JordanBasis<S> basis;
  basis.a = std::move(a);
  basis.v = std::move(v);
  basis.structure = std::move(structure);
  basis.eps_zero = eps_zero;
  const std::size_t n = basis.a.rows();
  basis.structure.dimension = n;

  basis.j = Matrix<S>(n, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis.structure.eigenvalues.size(); ++i) {
    const auto& info = basis.structure.eigenvalues[i];
    for (std::size_t c = 0; c < info.partial_multiplicities.size(); ++c) {
      std::size_t r = info.partial_multiplicities[c];
      basis.subspaces.push_back({{i, c}, r, col});
      for (std::size_t t = 0; t < r; ++t) {
        basis.j.at(col, col) = info.value;
        if (t + 1 < r) basis.j.at(col, col + 1) = ScalarOps<S>::one();
        ++col;
      }
    }
  }
  if (col != n) raise(Errc::inconsistent_dimensions, "partial multiplicities do not sum to N");

  double residual = jordan_residual(basis.a, basis.v, basis.j);
  double scale = std::max(1.0, one_norm(basis.a) * one_norm(basis.v));
  if constexpr (ScalarOps<S>::exact) {
    if (residual != 0.0) raise(Errc::chain_defect, "A V != V J for the supplied basis");
  } else {
    if (residual > tol_rel * scale)
      raise(Errc::chain_defect, "A V = V J residual " + std::to_string(residual) +
                                    " exceeds tolerance for the supplied basis");
  }
  if (rank(basis.v, eps_zero) != n)
    raise(Errc::singular_matrix, "supplied eigenvector matrix is singular");
  return basis;
}

namespace detail {

// Exact block 1-norm when every entry magnitude is rational; nullopt
// otherwise.
inline std::optional<mpq_class> exact_block_one_norm(const Matrix<GaussianRational>& block) {
  mpq_class best(0);
  for (std::size_t j = 0; j < block.cols(); ++j) {
    mpq_class sum(0);
    for (std::size_t i = 0; i < block.rows(); ++i) {
      auto mag = block(i, j).exact_abs();
      if (!mag) return std::nullopt;
      sum += *mag;
    }
    if (sum > best) best = sum;
  }
  return best;
}

template <class S>
S block_norm_scalar(const Matrix<S>& block) {
  if constexpr (ScalarOps<S>::exact) {
    if (auto exact = exact_block_one_norm(block)) return GaussianRational(*exact);
    return GaussianRational(rational_from_double(one_norm(block)));
  } else {
    return Complex(one_norm(block), 0.0);
  }
}

}  // namespace detail

// Rescales every chain block to unit induced 1-norm. The block scaling
// commutes with the Jordan blocks, so V' J V'^{-1} is unchanged.
template <class S>
JordanBasis<S> normalize_chains(const JordanBasis<S>& basis) {
  JordanBasis<S> out = basis;
  for (const SubspaceSpan& s : basis.subspaces) {
    Matrix<S> block = basis.block(s.id);
    S norm = detail::block_norm_scalar(block);
    if (ScalarOps<S>::is_zero(norm, 0.0)) continue;
    S factor = ScalarOps<S>::one() / norm;
    for (std::size_t j = 0; j < s.dim; ++j)
      for (std::size_t i = 0; i < out.v.rows(); ++i)
        out.v.at(i, s.col_begin + j) = factor * basis.v(i, s.col_begin + j);
  }
  return out;
}

// Replaces every chain by a randomized chain spanning the same Jordan
// subspace: the new top is a random combination of the old chain vectors with
// a nonzero leading coefficient, propagated down by (A - lambda I).
// Deterministic for a fixed seed.
template <class S>
JordanBasis<S> regenerate_chains(const JordanBasis<S>& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> lead(1, 3);

  JordanBasis<S> out = basis;
  for (const SubspaceSpan& s : basis.subspaces) {
    const S& lambda = basis.eigen_info(s.id.eig).value;
    Matrix<S> shifted = shifted_matrix(basis.a, lambda);
    std::vector<S> top(basis.v.rows(), ScalarOps<S>::zero());
    for (std::size_t t = 0; t < s.dim; ++t) {
      long c = (t + 1 == s.dim) ? lead(rng) : coeff(rng);
      if (c == 0) continue;
      S f = ScalarOps<S>::from_int(c);
      for (std::size_t i = 0; i < top.size(); ++i)
        top[i] += f * basis.v(i, s.col_begin + t);
    }
    std::vector<std::vector<S>> chain{top};
    for (std::size_t q = s.dim; q >= 2; --q) chain.push_back(shifted * chain.back());
    std::reverse(chain.begin(), chain.end());
    for (std::size_t t = 0; t < s.dim; ++t)
      for (std::size_t i = 0; i < out.v.rows(); ++i)
        out.v.at(i, s.col_begin + t) = chain[t][i];
  }
  if (rank(out.v, basis.eps_zero) != out.v.rows())
    raise(Errc::chain_defect, "regenerated chains lost linear independence");
  return out;
}

// Jordan basis of the scaled matrix f*A derived from a basis of A:
// eigenvalues scale by f and the p-th chain vector by f^(1-p). Subspaces and
// their ordering are unchanged.
template <class S>
JordanBasis<S> scale_shift_basis(const JordanBasis<S>& basis, const S& f) {
  if (ScalarOps<S>::is_zero(f, 0.0)) raise(Errc::zero_spectral_radius, "scale factor is zero");
  JordanBasis<S> out = basis;
  out.a = f * basis.a;
  for (auto& info : out.structure.eigenvalues) info.value = f * info.value;
  S inv_f = ScalarOps<S>::one() / f;
  for (const SubspaceSpan& s : basis.subspaces) {
    S factor = ScalarOps<S>::one();
    for (std::size_t t = 0; t < s.dim; ++t) {
      if (t > 0) factor = factor * inv_f;
      for (std::size_t i = 0; i < out.v.rows(); ++i)
        out.v.at(i, s.col_begin + t) = factor * basis.v(i, s.col_begin + t);
    }
  }
  // Rebuild J for the scaled eigenvalues.
  out.j = Matrix<S>(basis.j.rows(), basis.j.cols());
  for (const SubspaceSpan& s : out.subspaces) {
    const S& lambda = out.structure.eigenvalues[s.id.eig].value;
    for (std::size_t t = 0; t < s.dim; ++t) {
      out.j.at(s.col_begin + t, s.col_begin + t) = lambda;
      if (t + 1 < s.dim) out.j.at(s.col_begin + t, s.col_begin + t + 1) = ScalarOps<S>::one();
    }
  }
  return out;
}

// Spectral radius as a backend scalar. Exact backend: requires |lambda_max|
// to be rational (IrrationalSpectrum otherwise); ZeroSpectralRadius when the
// spectrum is {0}.
template <class S>
S spectral_radius_value(const Eigenstructure<S>& st, double zero_tol = kDefaultEpsCluster) {
  if (st.eigenvalues.empty()) raise(Errc::zero_spectral_radius, "empty spectrum");
  if constexpr (ScalarOps<S>::exact) {
    mpq_class best_norm2(0);
    for (const auto& info : st.eigenvalues) {
      mpq_class n2 = info.value.norm2();
      if (n2 > best_norm2) best_norm2 = n2;
    }
    if (sgn(best_norm2) == 0)
      raise(Errc::zero_spectral_radius, "all eigenvalues are zero (nilpotent shift)");
    auto root = rational_sqrt(best_norm2);
    if (!root)
      raise(Errc::irrational_spectrum,
            "spectral radius is irrational; use the float backend or scale manually");
    return GaussianRational(*root);
  } else {
    double best = 0.0;
    for (const auto& info : st.eigenvalues) best = std::max(best, std::abs(info.value));
    if (best <= zero_tol)
      raise(Errc::zero_spectral_radius, "all eigenvalues are zero (nilpotent shift)");
    return Complex(best, 0.0);
  }
}

// Adjacency scaled by 1/|lambda_max|.
template <class S>
Graph<S> normalized_shift(const Graph<S>& g, const Eigenstructure<S>& st,
                          double zero_tol = kDefaultEpsCluster) {
  S radius = spectral_radius_value(st, zero_tol);
  return scale_adjacency(g, ScalarOps<S>::one() / radius);
}

}  // namespace jsgft
