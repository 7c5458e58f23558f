#pragma once

#include <cstddef>
#include <vector>

#include "jsgft/jordan.hpp"

namespace jsgft {

// Dual (biorthogonal) basis W = V^{-H}, so w_i^H v_j = delta_ij.
template <class S>
struct DualBasis {
  Matrix<S> w;

  // W_ij^H: the rows of W^H = V^{-1} belonging to one chain block.
  Matrix<S> block_rows(const SubspaceSpan& s) const {
    Matrix<S> out(s.dim, w.rows());
    for (std::size_t t = 0; t < s.dim; ++t)
      for (std::size_t c = 0; c < w.rows(); ++c)
        out.at(t, c) = ScalarOps<S>::conj(w(c, s.col_begin + t));
    return out;
  }
};

template <class S>
DualBasis<S> dual_basis(const JordanBasis<S>& basis) {
  Matrix<S> v_inv = inverse(basis.v, basis.eps_zero);
  return {v_inv.conjugate_transpose()};
}

// Oblique projector P_ij = V_ij W_ij^H onto one Jordan subspace along the
// direct sum of the others.
template <class S>
Matrix<S> projector(const JordanBasis<S>& basis, const DualBasis<S>& dual, JordanSubspaceId id) {
  const SubspaceSpan& s = basis.span_of(id);
  return basis.block(id) * dual.block_rows(s);
}

template <class S>
struct SpectralProjectorSet {
  std::vector<SubspaceSpan> subspaces;        // copy of the basis partition
  std::vector<Matrix<S>> projectors;          // parallel to subspaces
  std::vector<Matrix<S>> component_matrices;  // Z_i0 per eigenvalue
  std::vector<S> eigenvalues;

  const Matrix<S>& projector_for(JordanSubspaceId id) const {
    for (std::size_t k = 0; k < subspaces.size(); ++k)
      if (subspaces[k].id == id) return projectors[k];
    raise(Errc::unknown_subspace, "no projector for subspace " + id.str());
  }
};

template <class S>
SpectralProjectorSet<S> make_projector_set(const JordanBasis<S>& basis, const DualBasis<S>& dual) {
  SpectralProjectorSet<S> set;
  set.subspaces = basis.subspaces;
  set.projectors.reserve(basis.subspaces.size());
  for (const SubspaceSpan& s : basis.subspaces)
    set.projectors.push_back(projector(basis, dual, s.id));

  const std::size_t n = basis.a.rows();
  for (std::size_t i = 0; i < basis.structure.eigenvalues.size(); ++i) {
    Matrix<S> z(n, n);
    for (std::size_t k = 0; k < set.subspaces.size(); ++k)
      if (set.subspaces[k].id.eig == i) z = z + set.projectors[k];
    set.component_matrices.push_back(std::move(z));
    set.eigenvalues.push_back(basis.structure.eigenvalues[i].value);
  }
  return set;
}

// First component matrix Z_i0 = sum_j P_ij of one eigenvalue; projects onto
// its generalized eigenspace.
template <class S>
const Matrix<S>& component_matrix(const SpectralProjectorSet<S>& set, std::size_t eig_index) {
  if (eig_index >= set.component_matrices.size())
    raise(Errc::unknown_eigenvalue, "eigenvalue index " + std::to_string(eig_index + 1));
  return set.component_matrices[eig_index];
}

// ||P_k P_l - delta_kl P_k||_1 evaluated through the factored form
// V_k (W_k^H V_l) W_l^H, which costs N^2 r instead of N^3 per pair.
template <class S>
double projector_product_residual(const JordanBasis<S>& basis, const DualBasis<S>& dual,
                                  const SubspaceSpan& k, const SubspaceSpan& l) {
  Matrix<S> gram = dual.block_rows(k) * basis.block(l.id);  // W_k^H V_l
  if (k.id == l.id) gram = gram - Matrix<S>::identity(k.dim);
  Matrix<S> residual = (basis.block(k.id) * gram) * dual.block_rows(l);
  return one_norm(residual);
}

inline constexpr std::size_t kUnmatchedSubspace = static_cast<std::size_t>(-1);

// Pairs the subspaces of two decompositions of the same matrix by
// (eigenvalue, chain length, span equality); result[k] is the index in `b` of
// the subspace matching a.subspaces[k], or kUnmatchedSubspace. Chain order
// within equal lengths is arbitrary, so matching by column position would be
// wrong; span equality is tested by the rank of the stacked chain blocks.
template <class S>
std::vector<std::size_t> match_subspaces(const JordanBasis<S>& a, const JordanBasis<S>& b,
                                         double eps_cluster = kDefaultEpsCluster) {
  auto lambda_close = [&](const S& x, const S& y) {
    if constexpr (ScalarOps<S>::exact)
      return x == y;
    else
      return std::abs(x - y) <= 2.0 * eps_cluster;
  };

  std::vector<std::size_t> result(a.subspaces.size(), kUnmatchedSubspace);
  std::vector<bool> used(b.subspaces.size(), false);
  for (std::size_t k = 0; k < a.subspaces.size(); ++k) {
    const SubspaceSpan& sa = a.subspaces[k];
    const S& la = a.eigen_info(sa.id.eig).value;
    Matrix<S> block_a = a.block(sa.id);
    for (std::size_t l = 0; l < b.subspaces.size(); ++l) {
      if (used[l]) continue;
      const SubspaceSpan& sb = b.subspaces[l];
      if (sb.dim != sa.dim) continue;
      if (!lambda_close(la, b.eigen_info(sb.id.eig).value)) continue;
      // Same span iff stacking both blocks does not increase the rank.
      Matrix<S> stacked(block_a.rows(), sa.dim + sb.dim);
      Matrix<S> block_b = b.block(sb.id);
      for (std::size_t i = 0; i < block_a.rows(); ++i) {
        for (std::size_t j = 0; j < sa.dim; ++j) stacked.at(i, j) = block_a(i, j);
        for (std::size_t j = 0; j < sb.dim; ++j) stacked.at(i, sa.dim + j) = block_b(i, j);
      }
      if (rank(stacked, a.eps_zero) == sa.dim) {
        result[k] = l;
        used[l] = true;
        break;
      }
    }
  }
  return result;
}

}  // namespace jsgft
