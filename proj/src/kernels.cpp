#include "kspectral/kernels.hpp"

#include <cmath>

#include "kspectral/errors.hpp"

namespace kspectral {

double mu_scalar(const BoundarySample& sample, cplx z) {
  const cplx diff = sample.sigma - z;
  if (std::abs(diff) < kOnBoundaryDistance) {
    throw Error(ErrorCode::OnBoundary, "kernel evaluated at its own boundary node");
  }
  // (a - conj(a)) / (2 pi i) = Im(a) / pi with a = sigma' / (sigma - z)
  const cplx value = (sample.dsigma / diff - std::conj(sample.dsigma) / std::conj(diff)) / (2.0 * kPi * kI);
  return value.real();
}

Matrix mu_from_resolvent(const BoundarySample& sample, const Matrix& resolvent) {
  const Matrix weighted = sample.dsigma * resolvent;
  return (weighted - weighted.adjoint()) / (2.0 * kPi * kI);
}

Matrix mu_matrix(const BoundarySample& sample, const Matrix& A) {
  return mu_from_resolvent(sample, resolvent(sample.sigma, A));
}

double log_derivative_density(const BoundarySample& sample, const Annulus& annulus) {
  return sample.circle == Circle::Outer ? 1.0 / (2.0 * kPi * annulus.outer()) : -annulus.outer() / (2.0 * kPi);
}

namespace {

void require_invertible(const Matrix& A) {
  Matrix unused;
  if (!checked_inverse(A, unused)) throw Error(ErrorCode::SingularMatrix, "A is numerically singular");
}

}  // namespace

Matrix nu_quantum(const BoundarySample& sample, const Matrix& A, const Annulus& annulus) {
  require_invertible(A);
  Matrix nu = mu_matrix(sample, A);
  nu.diagonal().array() -= log_derivative_density(sample, annulus);
  return nu;
}

Matrix nu_numerical(const BoundarySample& sample, const Matrix& A, const Annulus& annulus) {
  require_invertible(A);
  Matrix nu = mu_matrix(sample, A);
  if (sample.circle == Circle::Inner) nu.diagonal().array() -= 2.0 * log_derivative_density(sample, annulus);
  return nu;
}

Matrix nu_kernel(OperatorClass cls, const BoundarySample& sample, const Matrix& A, const Annulus& annulus) {
  return cls == OperatorClass::Quantum ? nu_quantum(sample, A, annulus) : nu_numerical(sample, A, annulus);
}

KernelFactorization factor_nu(OperatorClass cls, const BoundarySample& sample, const Matrix& A,
                              const Annulus& annulus, InnerForm form) {
  const auto d = A.rows();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix left = resolvent(sample.sigma, A);
  const cplx sigma = sample.sigma;

  if (sample.circle == Circle::Outer) {
    const double R = annulus.outer();
    const double scale = 1.0 / (2.0 * kPi * R);
    if (cls == OperatorClass::Quantum) return {left, R * R * id - A * A.adjoint(), scale};
    // 2 R^2 I - sigma A^* - conj(sigma) A = 2R (R I - Re(e^{-i theta} A))
    return {left, 2.0 * R * R * id - sigma * A.adjoint() - std::conj(sigma) * A, scale};
  }

  const double r = annulus.inner();
  const double R = annulus.outer();
  const double scale = 1.0 / (2.0 * kPi * r);
  if (form == InnerForm::Direct) {
    if (cls == OperatorClass::Quantum) return {left, A * A.adjoint() - r * r * id, scale};
    return {left, 2.0 * A * A.adjoint() - sigma * A.adjoint() - std::conj(sigma) * A, scale};
  }

  const Matrix B = inverse(A);
  const Matrix outer = left * A;
  if (cls == OperatorClass::Quantum) return {outer, R * R * id - B * B.adjoint(), scale * r * r};
  // sigma = r e^{-i theta}:  2I - r(e^{-i theta} B + e^{i theta} B^*)
  return {outer, 2.0 * id - sigma * B - std::conj(sigma) * B.adjoint(), scale};
}

HermitianCheck psd_check(const Matrix& H, double tol) {
  const double min_eig = min_hermitian_eigenvalue(H);
  const double asymmetry = op_norm(H - H.adjoint());
  return {min_eig, asymmetry, min_eig >= -tol && asymmetry <= tol};
}

}  // namespace kspectral
