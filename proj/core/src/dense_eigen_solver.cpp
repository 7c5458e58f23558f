#include <Eigen/Eigenvalues>

#include "jsgft/eigenvalues.hpp"

namespace jsgft {

std::vector<Complex> dense_eigenvalues(const Matrix<Complex>& a) {
  if (!a.square()) raise(Errc::dimension_mismatch, "eigenvalues of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    raise(Errc::numerical_conformance, "dense eigenvalue solver did not converge");
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace jsgft
