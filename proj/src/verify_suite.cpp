#include "kspectral/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "kspectral/bounds.hpp"
#include "kspectral/calculus.hpp"
#include "kspectral/classes.hpp"
#include "kspectral/kernels.hpp"
#include "kspectral/serialize.hpp"

namespace kspectral {

namespace {

constexpr AdaptiveOptions kTight{1e-13, 64, 1 << 16};
constexpr int kKernelNodes = 256;
constexpr int kDegree = 3;

struct Context {
  VerifyOptions options;
  Annulus annulus;
  double margin;

  std::uint64_t seed(std::uint64_t stream, int index) const {
    return options.seed * 0x9E3779B97F4A7C15ULL + stream * 1000003ULL + static_cast<std::uint64_t>(index);
  }

  Matrix member(OperatorClass cls, int index) const {
    return sample_member(cls, options.dim, annulus.outer(), margin, seed(cls == OperatorClass::Quantum ? 1 : 2, index));
  }

  LaurentFunction function(int index) const { return random_laurent(-kDegree, kDegree, seed(3, index), annulus); }

  cplx interior_point(int index) const {
    std::mt19937_64 rng(seed(4, index));
    const double pad = std::min(0.05, 0.2 * (annulus.outer() - annulus.inner()));
    std::uniform_real_distribution<double> modulus(annulus.inner() + pad, annulus.outer() - pad);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const double rho = modulus(rng);
    return std::polar(rho, angle(rng));
  }
};

void add(std::vector<VerifyRow>& rows, std::string name, double measured, double bound) {
  rows.push_back({std::move(name), measured, bound, measured <= bound});
}

double relative(const Matrix& a, const Matrix& b) {
  const double scale = std::max({op_norm(a), op_norm(b), 1e-300});
  return op_norm(a - b) / scale;
}

void kernel_checks(const Context& ctx, std::vector<VerifyRow>& rows) {
  const QuadratureGrid grid = QuadratureGrid::build(ctx.annulus, kKernelNodes);
  for (OperatorClass cls : {OperatorClass::Quantum, OperatorClass::Numerical}) {
    const std::string suffix = cls == OperatorClass::Quantum ? "quantum" : "numerical";
    double worst_eig = 0.0;
    double worst_factor = 0.0;
    for (int i = 0; i < ctx.options.samples; ++i) {
      const Matrix A = ctx.member(cls, i);
      for (const auto& node : grid.nodes()) {
        const Matrix nu = nu_kernel(cls, node, A, ctx.annulus);
        worst_eig = std::min(worst_eig, psd_check(nu, ctx.options.tol).min_eigenvalue);
        worst_factor = std::max(worst_factor, relative(factor_nu(cls, node, A, ctx.annulus).assemble(), nu));
        if (node.circle == Circle::Inner) {
          worst_factor = std::max(
              worst_factor, relative(factor_nu(cls, node, A, ctx.annulus, InnerForm::ThroughInverse).assemble(), nu));
        }
      }
    }
    add(rows, "kernel_psd_" + suffix + "_neg_min_eig", -worst_eig, ctx.options.tol);
    add(rows, "kernel_factorization_" + suffix + "_rel_dev", worst_factor, 1e-10);
  }

  double scalar_dev = 0.0;
  const LaurentFunction one = LaurentFunction::constant(1.0);
  for (int i = 0; i < ctx.options.samples; ++i) {
    const cplx z = ctx.interior_point(i);
    const auto S = converge(ctx.annulus, [&](const QuadratureGrid& g) { return S_scalar(one, z, g); }, kTight);
    scalar_dev = std::max(scalar_dev, std::abs(S.value - 2.0));
  }
  add(rows, "normalization_scalar_S1z_dev", scalar_dev, 1e-9);

  double matrix_dev = 0.0;
  for (int i = 0; i < ctx.options.samples; ++i) {
    const Matrix A = ctx.member(OperatorClass::Quantum, i);
    const ResolventTable table = converged_resolvents(A, ctx.annulus, kTight);
    const Matrix S = S_matrix(one, table);
    matrix_dev = std::max(matrix_dev, op_norm(S - 2.0 * Matrix::Identity(A.rows(), A.cols())));
  }
  add(rows, "normalization_matrix_S1A_dev", matrix_dev, 1e-9);

  std::vector<cplx> log_derivative;
  for (const auto& node : grid.nodes()) log_derivative.push_back(node.dsigma / node.sigma);
  add(rows, "log_derivative_integral", std::abs(integrate(grid, log_derivative) / (2.0 * kPi * kI)), 1e-12);
}

void lemma_checks(const Context& ctx, std::vector<VerifyRow>& rows) {
  const double R = ctx.annulus.outer();
  const QuadratureGrid grid = QuadratureGrid::build(ctx.annulus, 256);
  double sup_g = 0.0;
  double sup_centered = 0.0;
  for (int i = 0; i < ctx.options.samples; ++i) {
    const LemmaCheck check = verify_lemma(ctx.function(i), ctx.annulus, grid, 256, ctx.options.tol);
    sup_g = std::max(sup_g, check.sup_g);
    sup_centered = std::max(sup_centered, check.sup_centered);
  }
  add(rows, "lemma_sup_g", sup_g, 1.0 + ctx.options.tol);
  add(rows, "lemma_sup_centered", sup_centered, lemma_centered_bound(R) + ctx.options.tol);

  const LemmaCheck witness = verify_lemma(LaurentFunction::constant(1.0), ctx.annulus, grid, 64);
  add(rows, "lemma_sharpness_dev", std::abs(witness.sup_centered - lemma_centered_bound(R)), 1e-9);
  add(rows, "lemma_weight_integral_dev", std::abs(lemma_weight_integral(R, 2048) - lemma_centered_bound(R)), 1e-10);

  double shift_dev = 0.0;
  const double R4 = R * R * R * R;
  for (const auto& node : grid.nodes()) {
    if (node.circle != Circle::Outer) continue;
    const double shifted = mu_scalar(node, ctx.annulus.inner()) - 1.0 / (2.0 * kPi * R);
    const double closed = (R4 - 1.0) / (2.0 * kPi * R * (R4 - 2.0 * R * R * std::cos(node.theta) + 1.0));
    shift_dev = std::max(shift_dev, std::abs(shifted - closed) / closed);
  }
  add(rows, "lemma_kernel_shift_rel_dev", shift_dev, 1e-12);
}

void sbound_checks(const Context& ctx, std::vector<VerifyRow>& rows) {
  double monomial = 0.0;
  double decomposition_matrix = 0.0;
  double norm_quantum = 0.0;
  double norm_numerical = 0.0;
  for (int i = 0; i < ctx.options.samples; ++i) {
    const LaurentFunction f = ctx.function(i);
    for (OperatorClass cls : {OperatorClass::Quantum, OperatorClass::Numerical}) {
      const Matrix A = ctx.member(cls, i);
      const ResolventTable table = converged_resolvents(A, ctx.annulus, kTight);
      if (cls == OperatorClass::Quantum) {
        for (int k = -3; k <= 3; ++k) {
          const Matrix power = matrix_power(A, k);
          const Matrix image = cauchy_fA(LaurentFunction::monomial(k), table);
          monomial = std::max(monomial, op_norm(image - power) / std::max(1.0, op_norm(power)));
        }
        norm_quantum = std::max(norm_quantum, verify_S_quantum(f, table).norm_S);
      } else {
        norm_numerical = std::max(norm_numerical, verify_S_numerical(f, table).norm_min);
      }
      const Matrix S = S_matrix(f, table);
      decomposition_matrix = std::max(decomposition_matrix, op_norm(S - cauchy_fA(f, table) - g_matrix(f, table).adjoint()));
    }
  }

  double decomposition_scalar = 0.0;
  for (int i = 0; i < ctx.options.samples; ++i) {
    const LaurentFunction f = ctx.function(i);
    const cplx z = ctx.interior_point(i);
    const auto g = converge(ctx.annulus, [&](const QuadratureGrid& grid) { return g_scalar(f, z, grid); }, kTight);
    const auto S = converge(ctx.annulus, [&](const QuadratureGrid& grid) { return S_scalar(f, z, grid); }, kTight);
    decomposition_scalar = std::max(decomposition_scalar, std::abs(f(z) + std::conj(g.value) - S.value));
  }

  add(rows, "monomial_oracle_rel_dev", monomial, 1e-9);
  add(rows, "decomposition_scalar_dev", decomposition_scalar, 1e-8);
  add(rows, "decomposition_matrix_dev", decomposition_matrix, 1e-8);
  add(rows, "S_quantum_norm", norm_quantum, 2.0 + ctx.options.tol);
  add(rows, "S_numerical_shifted_norm", norm_numerical, 4.0 + ctx.options.tol);
}

}  // namespace

std::vector<VerifyRow> run_verify(const VerifyOptions& options) {
  const Annulus annulus = Annulus::make(options.R);
  const Context ctx{options, annulus, std::min(0.1, 0.25 * (options.R - 1.0))};
  std::vector<VerifyRow> rows;
  const bool all = options.suite == Suite::All;
  if (all || options.suite == Suite::Kernels) kernel_checks(ctx, rows);
  if (all || options.suite == Suite::Lemma) lemma_checks(ctx, rows);
  if (all || options.suite == Suite::SBound) sbound_checks(ctx, rows);
  return rows;
}

void write_verify_csv(std::ostream& out, const std::vector<VerifyRow>& rows) {
  out << "name,measured,bound,pass\n";
  for (const auto& row : rows) {
    out << row.name << ',' << format_double(row.measured) << ',' << format_double(row.bound) << ','
        << (row.pass ? "true" : "false") << '\n';
  }
}

}  // namespace kspectral
