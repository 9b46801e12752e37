#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kspectral/calculus.hpp"
#include "kspectral/classes.hpp"
#include "kspectral/functions.hpp"

namespace kspectral {

/// ||f(A)|| / sup |f| over the annulus; any value is a lower bound for the
/// best spectral constant of A. Throws DegenerateFunction for f = 0.
double gain(const LaurentFunction& f, const Matrix& A, const QuadratureGrid& grid);
double gain(const LaurentFunction& f, const ResolventTable& table);

/// Gain evaluator for a fixed A and exponent window [k_min, k_max].
///
/// The contour images of the monomials z^k are computed once; f(A) is then
/// their linear combination.
class GainEvaluator {
 public:
  GainEvaluator(const ResolventTable& table, int k_min, int k_max);

  int k_min() const noexcept { return k_min_; }
  int k_max() const noexcept { return k_max_; }
  const Annulus& annulus() const noexcept { return annulus_; }

  /// Throws DegenerateFunction if f is zero and MalformedInput if f has
  /// exponents outside the window.
  double operator()(const LaurentFunction& f) const;

  Matrix image(const LaurentFunction& f) const;
  /// Gain with the boundary sup taken at the given resolution.
  double evaluate(const LaurentFunction& f, int resolution) const;

 private:
  Annulus annulus_;
  int k_min_;
  int k_max_;
  std::vector<Matrix> monomials_;
};

struct SearchResult {
  double k_lower;
  LaurentFunction best_f;
  int iterations_used;
  std::uint64_t seed;
};

struct SearchBudget {
  int iters = 400;
  int restarts = 8;
  /// Exponent window [-degree, degree]; 0 selects the matrix dimension.
  int degree = 0;
};

/// Multi-restart coordinate hill climbing on the real and imaginary parts of
/// the coefficients. Restart i starts from random_laurent(seed + i); a
/// coordinate move is kept when it raises the gain, and the step halves after
/// a pass without improvement (20 halvings at most, `iters` passes per
/// restart). The returned function is normalized and never does worse than
/// the constant 1.
SearchResult search_k_lower(const Matrix& A, const Annulus& annulus, int k_min, int k_max, int iters, int restarts,
                            std::uint64_t seed);
SearchResult search_k_lower(const GainEvaluator& evaluator, int iters, int restarts, std::uint64_t seed);

struct ScanRow {
  double R;
  int dim;
  int index;
  OperatorClass cls;
  double k_lower;
  double a;
  double b;
  double k_upper_eq10;
  double k_upper_closed;
  double quantum_margin;
  double numerical_margin;
  std::string status;
};

/// For every R and sample index: draw a class member, search for a lower
/// bound, evaluate the two-constant upper bound at the witness. Rows whose
/// member cannot be drawn or evaluated are kept with a failure status.
std::vector<ScanRow> scan(OperatorClass cls, int d, const std::vector<double>& R_list, int samples_per_R,
                          const SearchBudget& budget, std::uint64_t seed);

}  // namespace kspectral
