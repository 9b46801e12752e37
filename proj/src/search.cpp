#include "kspectral/search.hpp"

#include <algorithm>
#include <cmath>

#include "kspectral/bounds.hpp"
#include "kspectral/errors.hpp"

namespace kspectral {

namespace {

constexpr int kDecayLevels = 20;
constexpr double kInitialStep = 0.5;
// boundary resolution used while climbing; the reported gain uses the default
constexpr int kClimbResolution = 256;

void require_nonzero(const LaurentFunction& f) {
  if (f.is_zero()) throw Error(ErrorCode::DegenerateFunction, "gain of the zero function");
}

}  // namespace

double gain(const LaurentFunction& f, const ResolventTable& table) {
  require_nonzero(f);
  return op_norm(cauchy_fA(f, table)) / boundary_sup(f, table.grid().annulus());
}

double gain(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid) {
  require_nonzero(f);
  return gain(f, ResolventTable(grid, A));
}

GainEvaluator::GainEvaluator(const ResolventTable& table, int k_min, int k_max)
    : annulus_(table.grid().annulus()), k_min_(k_min), k_max_(k_max) {
  if (k_min > k_max) throw Error(ErrorCode::MalformedInput, "empty exponent window");
  monomials_.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) monomials_.push_back(cauchy_fA(LaurentFunction::monomial(k), table));
}

Matrix GainEvaluator::image(const LaurentFunction& f) const {
  if (f.k_min() < k_min_ || f.k_max() > k_max_) {
    throw Error(ErrorCode::MalformedInput, "function exponents fall outside the evaluator window");
  }
  Matrix sum = Matrix::Zero(monomials_.front().rows(), monomials_.front().cols());
  for (int k = f.k_min(); k <= f.k_max(); ++k) {
    const cplx c = f.coeff(k);
    if (c != cplx{0.0}) sum += c * monomials_[static_cast<std::size_t>(k - k_min_)];
  }
  return sum;
}

double GainEvaluator::operator()(const LaurentFunction& f) const { return evaluate(f, kDefaultSupResolution); }

double GainEvaluator::evaluate(const LaurentFunction& f, int resolution) const {
  require_nonzero(f);
  return op_norm(image(f)) / boundary_sup(f, annulus_, resolution);
}

SearchResult search_k_lower(const GainEvaluator& evaluator, int iters, int restarts, std::uint64_t seed) {
  if (iters < 1 || restarts < 1) throw Error(ErrorCode::MalformedInput, "iters and restarts must be positive");
  const int k_min = evaluator.k_min();
  const int k_max = evaluator.k_max();
  const double R = evaluator.annulus().outer();

  // coefficient k lives on the scale R^{-|k|} for a function of sup-norm 1
  std::vector<double> scale;
  for (int k = k_min; k <= k_max; ++k) scale.push_back(std::pow(R, -std::abs(k)));

  double best_gain = -1.0;
  LaurentFunction best_f = LaurentFunction::constant(1.0);
  int passes_total = 0;

  for (int restart = 0; restart < restarts; ++restart) {
    LaurentFunction f = random_laurent(k_min, k_max, seed + static_cast<std::uint64_t>(restart), evaluator.annulus());
    double current = evaluator.evaluate(f, kClimbResolution);
    double step = kInitialStep;
    int level = 0;
    for (int pass = 0; pass < iters && level < kDecayLevels; ++pass) {
      ++passes_total;
      bool improved = false;
      for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        for (cplx unit : {cplx{1.0, 0.0}, cplx{0.0, 1.0}}) {
          for (double sign : {1.0, -1.0}) {
            LaurentFunction trial = f;
            trial.coeffs()[i] += sign * step * scale[i] * unit;
            if (trial.is_zero()) continue;
            const double value = evaluator.evaluate(trial, kClimbResolution);
            if (value > current) {
              f = std::move(trial);
              current = value;
              improved = true;
              break;
            }
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        ++level;
      }
    }
    if (current > best_gain) {
      best_gain = current;
      best_f = f;
    }
  }

  LaurentFunction normalized = (1.0 / boundary_sup(best_f, evaluator.annulus())) * best_f;
  double k_lower = evaluator(normalized);
  if (!(k_lower >= 1.0)) {
    normalized = LaurentFunction::constant(1.0);
    k_lower = 1.0;
  }
  return {k_lower, normalized, passes_total, seed};
}

SearchResult search_k_lower(const Matrix& A, const Annulus& annulus, int k_min, int k_max, int iters, int restarts,
                            std::uint64_t seed) {
  const ResolventTable table = converged_resolvents(A, annulus, {1e-12, 256, 1 << 16});
  return search_k_lower(GainEvaluator(table, k_min, k_max), iters, restarts, seed);
}

std::vector<ScanRow> scan(OperatorClass cls, int d, const std::vector<double>& R_list, int samples_per_R,
                          const SearchBudget& budget, std::uint64_t seed) {
  std::vector<ScanRow> rows;
  const int degree = budget.degree > 0 ? budget.degree : d;
  for (std::size_t ri = 0; ri < R_list.size(); ++ri) {
    const double R = R_list[ri];
    for (int index = 0; index < samples_per_R; ++index) {
      ScanRow row{R, d, index, cls, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, "ok"};
      const std::uint64_t row_seed = seed + 1000003ULL * ri + 7919ULL * static_cast<std::uint64_t>(index);
      try {
        const Annulus annulus = Annulus::make(R);
        row.k_upper_closed = k_upper_closed(R, cls);
        const double margin = std::min(0.1, 0.25 * (R - 1.0));
        const Matrix A = sample_member(cls, d, R, margin, row_seed);
        const ClassReport classes = classify(A, R);
        row.quantum_margin = classes.quantum_margin;
        row.numerical_margin = classes.numerical_margin;
        const ResolventTable table = converged_resolvents(A, annulus, {1e-12, 256, 1 << 16});
        const SearchResult found =
            search_k_lower(GainEvaluator(table, -degree, degree), budget.iters, budget.restarts, row_seed);
        row.k_lower = found.k_lower;
        const BoundReport bound = bound_report(found.best_f, table, classes);
        row.a = bound.a;
        row.b = bound.b;
        row.k_upper_eq10 = bound.k_upper_eq10;
      } catch (const Error& e) {
        row.status = "failed:" + std::string(to_string(e.code()));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace kspectral
