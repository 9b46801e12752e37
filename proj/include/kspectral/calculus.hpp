#pragma once

#include <vector>

#include "kspectral/functions.hpp"
#include "kspectral/geometry.hpp"
#include "kspectral/linalg.hpp"

namespace kspectral {

/// Eigenvalues of A must lie at least this far inside the annulus.
inline constexpr double kSpectrumMargin = 1e-8;

/// Throws SpectrumOutside unless every eigenvalue of A lies in the annulus
/// with margin kSpectrumMargin.
void require_spectrum_inside(const Matrix& A, const Annulus& annulus);

/// The resolvents (sigma_j I - A)^{-1} at every node of a grid.
///
/// All matrix transforms are sums over these; building the table once lets
/// many test functions share the cost for a fixed A.
class ResolventTable {
 public:
  ResolventTable(const QuadratureGrid& grid, const Matrix& A);

  const QuadratureGrid& grid() const noexcept { return grid_; }
  const Matrix& matrix() const noexcept { return A_; }
  Eigen::Index dim() const noexcept { return A_.rows(); }
  const Matrix& operator[](std::size_t j) const { return resolvents_[j]; }

 private:
  QuadratureGrid grid_;
  Matrix A_;
  std::vector<Matrix> resolvents_;
};

/// f(A) = (1/2 pi i) int f(sigma) (sigma I - A)^{-1} dsigma.
Matrix cauchy_fA(const LaurentFunction& f, const ResolventTable& table);
Matrix cauchy_fA(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid);

/// g(z) = (1/2 pi i) int conj(f(sigma)) dsigma / (sigma - z), z interior.
cplx g_scalar(const LaurentFunction& f, cplx z, const QuadratureGrid& grid);

/// g(A) = (1/2 pi i) int conj(f(sigma)) (sigma I - A)^{-1} dsigma.
Matrix g_matrix(const LaurentFunction& f, const ResolventTable& table);
Matrix g_matrix(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid);

/// Continuous extension of g to a boundary point:
///   g(sigma_0) = conj( int f(sigma(s)) mu(sigma(s), sigma_0) ds ).
/// On the circle carrying sigma_0 the kernel equals its constant limit
/// (1/(2 pi R) outside, -R/(2 pi) inside), so the integrand stays smooth.
cplx g_boundary(const LaurentFunction& f, const BoundarySample& point, const QuadratureGrid& grid);

/// S(f, z) = int f(sigma(s)) mu(sigma(s), z) ds.
cplx S_scalar(const LaurentFunction& f, cplx z, const QuadratureGrid& grid);

/// S(f, A) = int f(sigma(s)) mu(sigma(s), A) ds.
Matrix S_matrix(const LaurentFunction& f, const ResolventTable& table);
Matrix S_matrix(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid);

/// f evaluated at every grid node, in node order.
std::vector<cplx> boundary_values(const LaurentFunction& f, const QuadratureGrid& grid);

}  // namespace kspectral

namespace kspectral {

/// Resolvent table on the coarsest doubling of the grid (from options.n_start)
/// at which the images of z and 1/z agree with the previous level to
/// options.tol relative. Throws SpectrumOutside / ResolventSingular.
ResolventTable converged_resolvents(const Matrix& A, const Annulus& annulus, const AdaptiveOptions& options = {});

}  // namespace kspectral
