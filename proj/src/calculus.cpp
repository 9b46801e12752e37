#include "kspectral/calculus.hpp"

#include <cmath>
#include <string>

#include "kspectral/errors.hpp"
#include "kspectral/kernels.hpp"

namespace kspectral {

namespace {

constexpr cplx kTwoPiI{0.0, 2.0 * kPi};

void require_point_inside(cplx z, const Annulus& annulus) {
  if (!annulus.contains(z)) throw Error(ErrorCode::PointOutside, "point is not strictly inside the annulus");
}

}  // namespace

void require_spectrum_inside(const Matrix& A, const Annulus& annulus) {
  if (A.rows() != A.cols() || A.rows() == 0) throw Error(ErrorCode::MalformedInput, "matrix must be square");
  const Eigen::VectorXcd lambda = eigenvalues(A);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!annulus.contains(lambda(i), kSpectrumMargin)) {
      throw Error(ErrorCode::SpectrumOutside, "eigenvalue with modulus " + std::to_string(std::abs(lambda(i))) +
                                                  " is not inside the annulus");
    }
  }
}

ResolventTable::ResolventTable(const QuadratureGrid& grid, const Matrix& A) : grid_(grid), A_(A) {
  require_spectrum_inside(A, grid.annulus());
  resolvents_.reserve(grid.size());
  for (const auto& node : grid.nodes()) resolvents_.push_back(resolvent(node.sigma, A));
}

std::vector<cplx> boundary_values(const LaurentFunction& f, const QuadratureGrid& grid) {
  std::vector<cplx> values;
  values.reserve(grid.size());
  for (const auto& node : grid.nodes()) values.push_back(f(node.sigma));
  return values;
}

Matrix cauchy_fA(const LaurentFunction& f, const ResolventTable& table) {
  const auto& grid = table.grid();
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  Matrix sum = Matrix::Zero(table.dim(), table.dim());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    sum += (weights[j] * f(nodes[j].sigma) * nodes[j].dsigma) * table[j];
  }
  return sum / kTwoPiI;
}

Matrix cauchy_fA(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid) {
  return cauchy_fA(f, ResolventTable(grid, A));
}

cplx g_scalar(const LaurentFunction& f, cplx z, const QuadratureGrid& grid) {
  require_point_inside(z, grid.annulus());
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  cplx sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    sum += weights[j] * std::conj(f(nodes[j].sigma)) * nodes[j].dsigma / (nodes[j].sigma - z);
  }
  return sum / kTwoPiI;
}

Matrix g_matrix(const LaurentFunction& f, const ResolventTable& table) {
  const auto& grid = table.grid();
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  Matrix sum = Matrix::Zero(table.dim(), table.dim());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    sum += (weights[j] * std::conj(f(nodes[j].sigma)) * nodes[j].dsigma) * table[j];
  }
  return sum / kTwoPiI;
}

Matrix g_matrix(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid) {
  return g_matrix(f, ResolventTable(grid, A));
}

cplx g_boundary(const LaurentFunction& f, const BoundarySample& point, const QuadratureGrid& grid) {
  const Annulus& annulus = grid.annulus();
  // mu(sigma, sigma_0) for sigma != sigma_0 on the same circle: half the
  // rate of the central angle, signed by orientation
  const double same_circle = point.circle == Circle::Outer ? 1.0 / (2.0 * kPi * annulus.outer())
                                                           : -1.0 / (2.0 * kPi * annulus.inner());
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  cplx sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double kernel = nodes[j].circle == point.circle ? same_circle : mu_scalar(nodes[j], point.sigma);
    sum += weights[j] * f(nodes[j].sigma) * kernel;
  }
  return std::conj(sum);
}

cplx S_scalar(const LaurentFunction& f, cplx z, const QuadratureGrid& grid) {
  require_point_inside(z, grid.annulus());
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  cplx sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) sum += weights[j] * f(nodes[j].sigma) * mu_scalar(nodes[j], z);
  return sum;
}

Matrix S_matrix(const LaurentFunction& f, const ResolventTable& table) {
  const auto& grid = table.grid();
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  Matrix sum = Matrix::Zero(table.dim(), table.dim());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    sum += (weights[j] * f(nodes[j].sigma)) * mu_from_resolvent(nodes[j], table[j]);
  }
  return sum;
}

Matrix S_matrix(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid) {
  return S_matrix(f, ResolventTable(grid, A));
}

}  // namespace kspectral

namespace kspectral {

ResolventTable converged_resolvents(const Matrix& A, const Annulus& annulus, const AdaptiveOptions& options) {
  const LaurentFunction forward = LaurentFunction::monomial(1);
  const LaurentFunction backward = LaurentFunction::monomial(-1);
  int n = std::max(options.n_start, QuadratureGrid::kMinNodes);
  ResolventTable table(QuadratureGrid::build(annulus, n), A);
  Matrix previous_forward = cauchy_fA(forward, table);
  Matrix previous_backward = cauchy_fA(backward, table);
  while (2 * n <= options.n_max) {
    n *= 2;
    ResolventTable next(QuadratureGrid::build(annulus, n), A);
    Matrix current_forward = cauchy_fA(forward, next);
    Matrix current_backward = cauchy_fA(backward, next);
    const double scale = std::max({1.0, detail::magnitude(current_forward), detail::magnitude(current_backward)});
    const double change = std::max(detail::distance(current_forward, previous_forward),
                                   detail::distance(current_backward, previous_backward));
    table = std::move(next);
    if (change <= options.tol * scale) break;
    previous_forward = std::move(current_forward);
    previous_backward = std::move(current_backward);
  }
  return table;
}

}  // namespace kspectral
