#include "kspectral/linalg.hpp"

#include <cmath>
#include <limits>

#include "kspectral/errors.hpp"

namespace kspectral {

double op_norm(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

namespace {

Eigen::VectorXd hermitian_spectrum(const Matrix& H) {
  const Matrix sym = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double min_hermitian_eigenvalue(const Matrix& H) { return hermitian_spectrum(H).minCoeff(); }

double max_hermitian_eigenvalue(const Matrix& H) { return hermitian_spectrum(H).maxCoeff(); }

Eigen::VectorXcd eigenvalues(const Matrix& A) {
  Eigen::ComplexEigenSolver<Matrix> solver(A, false);
  return solver.eigenvalues();
}

bool checked_inverse(const Matrix& M, Matrix& inverse) {
  Eigen::PartialPivLU<Matrix> lu(M);
  const double rcond = lu.rcond();
  if (!(rcond > 1.0 / kMaxCondition)) return false;
  inverse = lu.inverse();
  return inverse.allFinite();
}

Matrix resolvent(cplx z, const Matrix& A) {
  Matrix shifted = -A;
  shifted.diagonal().array() += z;
  Matrix out;
  if (!checked_inverse(shifted, out)) {
    throw Error(ErrorCode::ResolventSingular, "zI - A is numerically singular");
  }
  return out;
}

Matrix inverse(const Matrix& A) {
  Matrix out;
  if (!checked_inverse(A, out)) {
    throw Error(ErrorCode::SingularMatrix, "matrix is numerically singular");
  }
  return out;
}

Matrix matrix_power(const Matrix& A, int k) {
  const Matrix base = k >= 0 ? A : inverse(A);
  Matrix out = Matrix::Identity(A.rows(), A.cols());
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

}  // namespace kspectral
