#pragma once

#include "kspectral/geometry.hpp"
#include "kspectral/linalg.hpp"

namespace kspectral {

/// Which operator class a shifted kernel or bound refers to.
///   Quantum:   ||A|| < R and ||A^{-1}|| < R
///   Numerical: w(A) < R and w(A^{-1}) < R
enum class OperatorClass { Quantum, Numerical };

/// Distance below which z is treated as lying on the boundary node.
inline constexpr double kOnBoundaryDistance = 1e-12;

/// Default slack for positivity certificates.
inline constexpr double kPsdSlack = 1e-9;

/// Double-layer kernel (1/pi) d arg(sigma(s) - z)/ds.
double mu_scalar(const BoundarySample& sample, cplx z);

/// Matrix double-layer kernel
///   (1/2 pi i) (sigma' (sigma I - A)^{-1} - conj(sigma') (conj(sigma) I - A^*)^{-1}).
/// Self-adjoint by construction.
Matrix mu_matrix(const BoundarySample& sample, const Matrix& A);

/// Same kernel from a precomputed resolvent (sigma I - A)^{-1}.
Matrix mu_from_resolvent(const BoundarySample& sample, const Matrix& resolvent);

/// Real scalar (1/2 pi i) sigma'/sigma at a boundary node: 1/(2 pi R) on the
/// outer circle and -R/(2 pi) on the inner one.
double log_derivative_density(const BoundarySample& sample, const Annulus& annulus);

/// mu(sigma, A) - (1/2 pi i)(sigma'/sigma) I; PSD for quantum-annulus members.
Matrix nu_quantum(const BoundarySample& sample, const Matrix& A, const Annulus& annulus);

/// mu on the outer circle, mu - (1/pi i)(sigma'/sigma) I on the inner one;
/// PSD for numerical-annulus members.
Matrix nu_numerical(const BoundarySample& sample, const Matrix& A, const Annulus& annulus);

Matrix nu_kernel(OperatorClass cls, const BoundarySample& sample, const Matrix& A, const Annulus& annulus);

/// Product form  scale * L * M * L^*  of a shifted kernel, where M is the
/// Hermitian factor whose positivity certifies that of nu.
struct KernelFactorization {
  Matrix left;
  Matrix middle;
  double scale;

  Matrix assemble() const { return scale * left * middle * left.adjoint(); }
};

/// Which of the equivalent product forms to build on the inner circle:
/// Direct uses (sigma I - A)^{-1} as the outer factor, ThroughInverse pulls A
/// out and expresses the middle factor through B = A^{-1}.
enum class InnerForm { Direct, ThroughInverse };

/// Factorization of nu_kernel(cls, sample, A). On the outer circle `form` is
/// ignored.
KernelFactorization factor_nu(OperatorClass cls, const BoundarySample& sample, const Matrix& A,
                              const Annulus& annulus, InnerForm form = InnerForm::Direct);

struct HermitianCheck {
  double min_eigenvalue;
  double asymmetry;
  bool pass;
};

/// Min eigenvalue of (H + H^*)/2 and ||H - H^*||; passes iff
/// min_eigenvalue >= -tol and asymmetry <= tol.
HermitianCheck psd_check(const Matrix& H, double tol = kPsdSlack);

}  // namespace kspectral
