#pragma once

#include <complex>

#include <Eigen/Dense>

namespace kspectral {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Largest condition number accepted for a resolvent or inverse.
inline constexpr double kMaxCondition = 1e14;

/// Largest singular value.
double op_norm(const Matrix& A);

/// Smallest eigenvalue of the Hermitian part (H + H^*)/2.
double min_hermitian_eigenvalue(const Matrix& H);

/// Largest eigenvalue of the Hermitian part (H + H^*)/2.
double max_hermitian_eigenvalue(const Matrix& H);

Eigen::VectorXcd eigenvalues(const Matrix& A);

/// Inverse of M through partial-pivot LU. Returns false when M is singular
/// to working precision or its estimated condition exceeds kMaxCondition.
bool checked_inverse(const Matrix& M, Matrix& inverse);

/// (z I - A)^{-1}; throws ResolventSingular when ill-conditioned.
Matrix resolvent(cplx z, const Matrix& A);

/// A^{-1}; throws SingularMatrix when ill-conditioned.
Matrix inverse(const Matrix& A);

/// A^k for any integer k, by repeated multiplication of A or A^{-1}.
Matrix matrix_power(const Matrix& A, int k);

}  // namespace kspectral
