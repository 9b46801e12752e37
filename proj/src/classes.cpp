#include "kspectral/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "kspectral/errors.hpp"

namespace kspectral {

namespace {

constexpr int kPhiGrid = 720;
constexpr int kRefinedPeaks = 4;

double top_eigenvalue_at(const Matrix& A, double phi) {
  const cplx phase = std::polar(1.0, phi);
  const Matrix H = 0.5 * (phase * A + std::conj(phase) * A.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

double golden_max(const Matrix& A, double lo, double hi, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = top_eigenvalue_at(A, x1);
  double f2 = top_eigenvalue_at(A, x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = top_eigenvalue_at(A, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = top_eigenvalue_at(A, x1);
    }
  }
  return std::max(f1, f2);
}

void check_margin(double R, double margin) {
  if (!(margin > 0.0) || !(margin < R - 1.0)) {
    throw Error(ErrorCode::MalformedInput, "sampler margin must lie in (0, R - 1)");
  }
}

Matrix gaussian_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix G(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      G(i, j) = {re, im};
    }
  }
  return G;
}

}  // namespace

double numerical_radius(const Matrix& A, double tol) {
  if (A.size() == 0) return 0.0;
  const double h = 2.0 * kPi / kPhiGrid;
  std::vector<double> values(kPhiGrid);
  for (int j = 0; j < kPhiGrid; ++j) values[static_cast<std::size_t>(j)] = top_eigenvalue_at(A, h * j);

  std::vector<int> peaks;
  for (int j = 0; j < kPhiGrid; ++j) {
    const double v = values[static_cast<std::size_t>(j)];
    if (v >= values[static_cast<std::size_t>((j + kPhiGrid - 1) % kPhiGrid)] &&
        v >= values[static_cast<std::size_t>((j + 1) % kPhiGrid)]) {
      peaks.push_back(j);
    }
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
  });
  if (peaks.size() > static_cast<std::size_t>(kRefinedPeaks)) peaks.resize(kRefinedPeaks);

  double best = *std::max_element(values.begin(), values.end());
  for (int j : peaks) best = std::max(best, golden_max(A, h * (j - 1), h * (j + 1), tol));
  return best;
}

ClassReport classify(const Matrix& A, double R) {
  ClassReport report{};
  report.op_norm = op_norm(A);
  report.num_radius = numerical_radius(A);
  Matrix B;
  if (checked_inverse(A, B)) {
    report.inv_op_norm = op_norm(B);
    report.inv_num_radius = numerical_radius(B);
  } else {
    report.inv_op_norm = std::numeric_limits<double>::infinity();
    report.inv_num_radius = std::numeric_limits<double>::infinity();
  }
  report.quantum_margin = R - std::max(report.op_norm, report.inv_op_norm);
  report.numerical_margin = R - std::max(report.num_radius, report.inv_num_radius);
  report.quantum_member = report.op_norm < R && report.inv_op_norm < R;
  report.numerical_member = report.num_radius < R && report.inv_num_radius < R;
  return report;
}

bool is_member(const ClassReport& report, OperatorClass cls) {
  return cls == OperatorClass::Quantum ? report.quantum_member : report.numerical_member;
}

bool spectrum_check(const Matrix& A, const Annulus& annulus, double margin) {
  const Eigen::VectorXcd lambda = eigenvalues(A);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!annulus.contains(lambda(i), margin)) return false;
  }
  return true;
}

Matrix random_unitary(int d, std::mt19937_64& rng) {
  const Matrix G = gaussian_matrix(d, rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix upper = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const cplx diag = upper(j, j);
    if (std::abs(diag) > 0.0) Q.col(j) *= diag / std::abs(diag);
  }
  return Q;
}

Matrix sample_quantum(int d, double R, double margin, std::uint64_t seed) {
  check_margin(R, margin);
  const Annulus annulus = Annulus::make(R);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> singular(1.0 / (R - margin), R - margin);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Matrix U = random_unitary(d, rng);
    const Matrix V = random_unitary(d, rng);
    Eigen::VectorXcd s(d);
    for (int i = 0; i < d; ++i) s(i) = singular(rng);
    Matrix A = U * s.asDiagonal() * V.adjoint();
    if (spectrum_check(A, annulus, 1e-8)) return A;
  }
  throw Error(ErrorCode::SamplerExhausted, "no quantum member after 100 draws");
}

Matrix sample_numerical(int d, double R, double margin, std::uint64_t seed) {
  check_margin(R, margin);
  const Annulus annulus = Annulus::make(R);
  const double target = R - margin;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Matrix W = random_unitary(d, rng);
    Matrix core;
    if (d >= 2 && unit(rng) < 0.25) {
      // w of [[0,a],[1/a,0]] is (a + 1/a)/2, below target for a < target + sqrt(target^2 - 1)
      const double a_max = target + std::sqrt(target * target - 1.0);
      const double a = 1.0 + (a_max - 1.0) * unit(rng);
      core = Matrix::Zero(d, d);
      core(0, 1) = a;
      core(1, 0) = 1.0 / a;
      const double log_bound = 0.9 * std::log(target);
      for (int i = 2; i < d; ++i) {
        core(i, i) = std::polar(std::exp(log_bound * (2.0 * unit(rng) - 1.0)), 2.0 * kPi * unit(rng));
      }
    } else {
      const Matrix G = gaussian_matrix(d, rng);
      const double size = 1.5 * unit(rng) * std::pow(0.8, attempt);
      core = Matrix::Identity(d, d) + (size / op_norm(G)) * G;
      core = random_unitary(d, rng) * core;
    }
    Matrix A = W * core * W.adjoint();
    Matrix B;
    if (!checked_inverse(A, B)) continue;
    const double w_forward = numerical_radius(A);
    const double w_inverse = numerical_radius(B);
    const double balanced = std::sqrt(w_forward * w_inverse);
    if (!(balanced < target)) continue;
    A *= target / w_forward;
    if (spectrum_check(A, annulus, 1e-8)) return A;
  }
  throw Error(ErrorCode::SamplerExhausted, "no numerical member after 1000 draws");
}

Matrix sample_normal(int d, double R, double margin, std::uint64_t seed) {
  check_margin(R, margin);
  std::mt19937_64 rng(seed);
  const double lo = std::log(1.0 / R + margin);
  const double hi = std::log(R - margin);
  std::uniform_real_distribution<double> log_modulus(lo, hi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const Matrix U = random_unitary(d, rng);
  Eigen::VectorXcd lambda(d);
  for (int i = 0; i < d; ++i) {
    const double rho = std::exp(log_modulus(rng));
    lambda(i) = std::polar(rho, angle(rng));
  }
  return U * lambda.asDiagonal() * U.adjoint();
}

Matrix sample_member(OperatorClass cls, int d, double R, double margin, std::uint64_t seed) {
  return cls == OperatorClass::Quantum ? sample_quantum(d, R, margin, seed) : sample_numerical(d, R, margin, seed);
}

}  // namespace kspectral
