#include "kspectral/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kspectral/errors.hpp"

namespace kspectral {

namespace {

void require_nodes(int n) {
  if (n < 64) throw Error(ErrorCode::GridTooCoarse, "circle means need at least 64 nodes, got " + std::to_string(n));
}

void require_normalized(const LaurentFunction& f, const Annulus& annulus) {
  const double sup = boundary_sup(f, annulus);
  if (sup > 1.0 + kNormalizationSlack) {
    throw Error(ErrorCode::NotNormalized, "sup of |f| over the annulus is " + std::to_string(sup));
  }
}

void require_member(const Matrix& A, double R, OperatorClass cls) {
  if (!is_member(classify(A, R), cls)) {
    throw Error(ErrorCode::NotMember, cls == OperatorClass::Quantum ? "A is not in the quantum annulus"
                                                                    : "A is not in the numerical annulus");
  }
}

// Points per circle at which b is sampled.
constexpr int kBoundaryMesh = 1024;

double shifted_norm(const Matrix& S, cplx c) {
  Matrix shifted = S;
  shifted.diagonal().array() -= c;
  return op_norm(shifted);
}

}  // namespace

cplx gamma(const LaurentFunction& f, const Annulus& annulus, int n) {
  require_nodes(n);
  cplx sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(std::polar(1.0, 2.0 * kPi * j / n));
  const double R2 = annulus.outer() * annulus.outer();
  return (R2 - 1.0) / (R2 + 1.0) * sum / static_cast<double>(n);
}

cplx gamma1(const LaurentFunction& f, const Annulus& annulus, int n) {
  require_nodes(n);
  cplx sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(std::polar(annulus.inner(), -2.0 * kPi * j / n));
  // (1/pi) * (2 pi / n) * sum
  return 2.0 * sum / static_cast<double>(n);
}

double lemma_centered_bound(double R) { return 2.0 / (R * R + 1.0); }

double lemma_weight_integral(double R, int n) {
  require_nodes(n);
  const double R2 = R * R;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double c = std::cos(2.0 * kPi * j / n);
    sum += R2 * (1.0 + c) / (R2 * R2 - 2.0 * R2 * c + 1.0);
  }
  return (R2 - 1.0) / (R2 + 1.0) * (2.0 / n) * sum;
}

LemmaCheck verify_lemma(const LaurentFunction& f, const Annulus& annulus, const QuadratureGrid& grid, int n_eval,
                        double tol) {
  require_normalized(f, annulus);
  const cplx center = std::conj(gamma(f, annulus, std::max(64, grid.n_per_circle())));
  LemmaCheck check{0.0, 0.0, lemma_centered_bound(annulus.outer()), false};
  for (Circle circle : {Circle::Outer, Circle::Inner}) {
    for (int j = 0; j < n_eval; ++j) {
      const BoundarySample point = boundary_sample(annulus, circle, 2.0 * kPi * j / n_eval);
      const cplx g = g_boundary(f, point, grid);
      check.sup_g = std::max(check.sup_g, std::abs(g));
      check.sup_centered = std::max(check.sup_centered, std::abs(g - center));
    }
  }
  check.pass = check.sup_g <= 1.0 + tol && check.sup_centered <= check.bound + tol;
  return check;
}

SQuantumCheck verify_S_quantum(const LaurentFunction& f, const ResolventTable& table) {
  const Annulus& annulus = table.grid().annulus();
  require_member(table.matrix(), annulus.outer(), OperatorClass::Quantum);
  require_normalized(f, annulus);
  const double norm = op_norm(S_matrix(f, table));
  return {norm, norm <= 2.0 + kBoundSlack};
}

SQuantumCheck verify_S_quantum(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid) {
  return verify_S_quantum(f, ResolventTable(grid, A));
}

cplx minimize_shift(const Matrix& S, cplx start) {
  cplx best = start;
  double best_value = shifted_norm(S, best);
  double step = 0.5 * std::max(1.0, std::abs(start));
  const cplx directions[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  while (step > 1e-12) {
    bool improved = false;
    for (cplx dir : directions) {
      const cplx trial = best + step * dir;
      const double value = shifted_norm(S, trial);
      if (value < best_value) {
        best = trial;
        best_value = value;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

namespace {

SNumericalCheck best_numerical_shift(const Matrix& S, cplx g1) {
  const auto d = static_cast<double>(S.rows());
  const cplx candidates[] = {g1, -g1, minimize_shift(S, S.trace() / d)};
  SNumericalCheck check{shifted_norm(S, candidates[0]), candidates[0], false};
  for (cplx c : candidates) {
    const double value = shifted_norm(S, c);
    if (value < check.norm_min) {
      check.norm_min = value;
      check.c1_used = c;
    }
  }
  check.pass = check.norm_min <= 4.0 + kBoundSlack;
  return check;
}

}  // namespace

SNumericalCheck verify_S_numerical(const LaurentFunction& f, const ResolventTable& table) {
  const Annulus& annulus = table.grid().annulus();
  require_member(table.matrix(), annulus.outer(), OperatorClass::Numerical);
  require_normalized(f, annulus);
  const cplx g1 = gamma1(f, annulus, std::max(64, table.grid().n_per_circle()));
  return best_numerical_shift(S_matrix(f, table), g1);
}

SNumericalCheck verify_S_numerical(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid) {
  return verify_S_numerical(f, ResolventTable(grid, A));
}

double k_upper_eq10(double a, double b) {
  if (a < 0.0 || b < 0.0) throw Error(ErrorCode::NegativeInput, "a and b must be nonnegative");
  return std::max(1.0, a + std::sqrt(a * a + b));
}

double k_upper_closed(double R, OperatorClass cls) {
  if (!(R > 1.0)) throw Error(ErrorCode::InvalidRadius, "closed-form bounds need R > 1");
  const double tail = 2.0 / (R * R + 1.0);
  return cls == OperatorClass::Quantum ? 1.0 + std::sqrt(1.0 + tail) : 2.0 + std::sqrt(4.0 + tail);
}

BoundReport bound_report(const LaurentFunction& f, const ResolventTable& table, const ClassReport& classes) {
  const QuadratureGrid& grid = table.grid();
  const Annulus& annulus = grid.annulus();
  if (!classes.quantum_member && !classes.numerical_member) {
    throw Error(ErrorCode::NotMember, "A belongs to neither annulus class");
  }
  require_normalized(f, annulus);
  const int n = std::max(64, grid.n_per_circle());

  BoundReport report{};
  report.class_used = classes.quantum_member ? OperatorClass::Quantum : OperatorClass::Numerical;
  report.gamma = gamma(f, annulus, n);
  report.gamma1 = gamma1(f, annulus, n);
  report.c2 = std::conj(report.gamma);

  const Matrix S = S_matrix(f, table);
  if (report.class_used == OperatorClass::Quantum) {
    report.c1 = 0.0;
    report.a = 0.5 * op_norm(S);
  } else {
    const SNumericalCheck shift = best_numerical_shift(S, report.gamma1);
    report.c1 = shift.c1_used;
    report.a = 0.5 * shift.norm_min;
  }

  const int mesh = std::min(grid.n_per_circle(), kBoundaryMesh);
  for (Circle circle : {Circle::Outer, Circle::Inner}) {
    for (int j = 0; j < mesh; ++j) {
      const BoundarySample point = boundary_sample(annulus, circle, 2.0 * kPi * j / mesh);
      report.b = std::max(report.b, std::abs(g_boundary(f, point, grid) - report.c2));
    }
  }
  report.k_upper_eq10 = k_upper_eq10(report.a, report.b);
  report.k_upper_closed = k_upper_closed(annulus.outer(), report.class_used);
  return report;
}

BoundReport bound_report(const LaurentFunction& f, const Matrix& A, double R, const QuadratureGrid& grid) {
  if (std::abs(grid.annulus().outer() - R) > 0.0) {
    throw Error(ErrorCode::InvalidRadius, "grid annulus does not match R");
  }
  const ClassReport classes = classify(A, R);
  if (!classes.quantum_member && !classes.numerical_member) {
    throw Error(ErrorCode::NotMember, "A belongs to neither annulus class");
  }
  return bound_report(f, ResolventTable(grid, A), classes);
}

}  // namespace kspectral
