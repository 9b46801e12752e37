#include <doctest.h>

#include <cmath>
#include <random>

#include "kspectral/calculus.hpp"
#include "kspectral/classes.hpp"
#include "kspectral/kernels.hpp"
#include "oracles.hpp"

using namespace kspectral;

namespace {

Matrix anti_diagonal(double a) {
  Matrix A = Matrix::Zero(2, 2);
  A(0, 1) = a;
  A(1, 0) = 1.0 / a;
  return A;
}

}  // namespace

TEST_CASE("mu_scalar closed forms at z = r") {
  const Annulus a = Annulus::make(2.0);
  const double R = 2.0;
  for (double theta : {0.0, 0.9, 2.5, 4.4}) {
    CHECK(mu_scalar(boundary_sample(a, Circle::Inner, theta + 0.01), a.inner()) ==
          doctest::Approx(-R / (2.0 * kPi)).epsilon(1e-12));
    const double expected = R / kPi * (R * R - std::cos(theta)) / (R * R * R * R - 2.0 * R * R * std::cos(theta) + 1.0);
    CHECK(mu_scalar(boundary_sample(a, Circle::Outer, theta), a.inner()) == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(mu_scalar(boundary_sample(a, Circle::Outer, 0.0), 0.5) == doctest::Approx(2.0 / (3.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("mu_scalar equals (1/pi) d arg(sigma - z)/ds by finite differences") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Annulus a = Annulus::make(2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Circle c = trial % 2 ? Circle::Outer : Circle::Inner;
    const double theta = 6.28 * unit(rng);
    const cplx z = std::polar(0.6 + 1.3 * unit(rng), 6.28 * unit(rng));
    const BoundarySample sample = boundary_sample(a, c, theta);
    const double radius = c == Circle::Outer ? 2.0 : 0.5;
    const auto curve = [&](double s) {
      return boundary_sample(a, c, theta + (s - sample.s) / radius).sigma;
    };
    CHECK(mu_scalar(sample, z) == doctest::Approx(oracle::double_layer_fd(curve, sample.s, z)).epsilon(1e-6));
  }
}

TEST_CASE("mu_scalar refuses its own node") {
  const Annulus a = Annulus::make(2.0);
  const BoundarySample s = boundary_sample(a, Circle::Outer, 1.0);
  try {
    mu_scalar(s, s.sigma);
    FAIL("expected OnBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnBoundary);
  }
}

TEST_CASE("mu_matrix: scalar reduction, self-adjointness, normal matrices") {
  const Annulus a = Annulus::make(2.0);
  const cplx z = std::polar(1.3, 0.7);
  Matrix one(1, 1);
  one(0, 0) = z;
  for (const auto& node : QuadratureGrid::build(a, 16).nodes()) {
    CHECK(std::abs(mu_matrix(node, one)(0, 0) - mu_scalar(node, z)) < 1e-14);
  }

  const Matrix A = sample_quantum(5, 2.0, 0.1, 3);
  for (const auto& node : QuadratureGrid::build(a, 32).nodes()) {
    const Matrix H = mu_matrix(node, A);
    CHECK(op_norm(H - H.adjoint()) <= 1e-13);
  }

  Eigen::VectorXcd lambda(3);
  lambda << cplx{1.5, 0.0}, std::polar(0.8, 2.0), std::polar(1.1, -0.4);
  const Matrix D = lambda.asDiagonal();
  for (const auto& node : QuadratureGrid::build(a, 16).nodes()) {
    const Matrix H = mu_matrix(node, D);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(H(i, i) - mu_scalar(node, lambda(i))) < 1e-14);
    CHECK(std::abs(H(0, 1)) < 1e-15);
  }
}

TEST_CASE("kernel integrals: mu and nu_quantum give 2I, nu_numerical gives 4I") {
  const Annulus a = Annulus::make(2.0);
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 1.5;
  A(1, 1) = 0.8;
  const QuadratureGrid grid = QuadratureGrid::build(a, 1024);
  Matrix mu = Matrix::Zero(2, 2);
  Matrix nq = Matrix::Zero(2, 2);
  Matrix nn = Matrix::Zero(2, 2);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const auto& node = grid.nodes()[j];
    mu += grid.weights()[j] * mu_matrix(node, A);
    nq += grid.weights()[j] * nu_quantum(node, A, a);
    nn += grid.weights()[j] * nu_numerical(node, A, a);
  }
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(op_norm(mu - 2.0 * id) < 1e-10);
  CHECK(op_norm(nq - 2.0 * id) < 1e-10);
  CHECK(op_norm(nn - 4.0 * id) < 1e-10);
}

TEST_CASE("nu_quantum is PSD and matches its product form for diag(1.5, 0.8)") {
  const Annulus a = Annulus::make(2.0);
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 1.5;
  A(1, 1) = 0.8;
  for (const auto& node : QuadratureGrid::build(a, 256).nodes()) {
    const Matrix nu = nu_quantum(node, A, a);
    CHECK(psd_check(nu).min_eigenvalue >= -1e-10);
    if (node.circle == Circle::Outer) {
      // 2 pi R nu = (R e^{it} - A)^{-1} (R^2 - A A^*) (R e^{-it} - A^*)^{-1}
      const Matrix left = (node.sigma * Matrix::Identity(2, 2) - A).inverse();
      const Matrix product = left * (4.0 * Matrix::Identity(2, 2) - A * A.adjoint()) * left.adjoint();
      CHECK(op_norm(2.0 * kPi * 2.0 * nu - product) <= 1e-10 * op_norm(product));
    }
  }
}

TEST_CASE("nu_numerical: outer nodes equal mu, inner nodes PSD for the anti-diagonal member") {
  const Annulus a = Annulus::make(2.0);
  const Matrix A = anti_diagonal(3.7);
  for (const auto& node : QuadratureGrid::build(a, 256).nodes()) {
    const Matrix nu = nu_numerical(node, A, a);
    if (node.circle == Circle::Outer) {
      CHECK(op_norm(nu - mu_matrix(node, A)) == 0.0);
    } else {
      CHECK(psd_check(nu).min_eigenvalue >= -1e-10);
    }
  }
}

TEST_CASE("both inner product forms agree with the direct kernels on random members") {
  for (double R : {1.2, 2.0, 5.0}) {
    const Annulus a = Annulus::make(R);
    const double margin = std::min(0.1, 0.25 * (R - 1.0));
    for (OperatorClass cls : {OperatorClass::Quantum, OperatorClass::Numerical}) {
      const Matrix A = sample_member(cls, 4, R, margin, 17);
      for (const auto& node : QuadratureGrid::build(a, 64).nodes()) {
        const Matrix nu = nu_kernel(cls, node, A, a);
        for (InnerForm form : {InnerForm::Direct, InnerForm::ThroughInverse}) {
          const KernelFactorization fac = factor_nu(cls, node, A, a, form);
          CHECK(op_norm(fac.assemble() - nu) <= 1e-10 * op_norm(nu));
          CHECK(psd_check(fac.middle, 1e-10).pass);
        }
      }
    }
  }
}

TEST_CASE("nu requires an invertible matrix") {
  const Annulus a = Annulus::make(2.0);
  Matrix A = Matrix::Zero(2, 2);
  A(0, 1) = 1.0;
  try {
    nu_quantum(boundary_sample(a, Circle::Outer, 0.0), A, a);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("mu_matrix refuses an eigenvalue on the node") {
  const Annulus a = Annulus::make(2.0);
  Matrix A = Matrix::Identity(2, 2) * 2.0;
  try {
    mu_matrix(boundary_sample(a, Circle::Outer, 0.0), A);
    FAIL("expected ResolventSingular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResolventSingular);
  }
}

TEST_CASE("psd_check examples") {
  const HermitianCheck id = psd_check(Matrix::Identity(3, 3), 1e-9);
  CHECK(id.min_eigenvalue == doctest::Approx(1.0));
  CHECK(id.pass);

  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = -1e-3;
  CHECK_FALSE(psd_check(D, 1e-9).pass);
  D(1, 1) = -1e-12;
  CHECK(psd_check(D, 1e-9).pass);

  Matrix skew = Matrix::Identity(2, 2);
  skew(0, 1) = 1e-3;
  const HermitianCheck asym = psd_check(skew, 1e-9);
  CHECK(asym.asymmetry == doctest::Approx(1e-3));
  CHECK_FALSE(asym.pass);
}
