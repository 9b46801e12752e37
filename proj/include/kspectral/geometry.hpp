#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "kspectral/errors.hpp"
#include "kspectral/linalg.hpp"

namespace kspectral {

/// Smallest accepted thickness R - 1 of an annulus.
inline constexpr double kMinThickness = 1e-6;

/// The open annulus {1/R < |z| < R}. Only R is stored; r is always 1/R.
class Annulus {
 public:
  static Annulus make(double R);

  double outer() const noexcept { return R_; }
  double inner() const noexcept { return 1.0 / R_; }

  /// True when r + margin < |z| < R - margin.
  bool contains(cplx z, double margin = 0.0) const noexcept;

 private:
  explicit Annulus(double R) : R_(R) {}
  double R_;
};

enum class Circle { Outer, Inner };

/// A point of the oriented boundary together with its arclength data.
/// Outer: sigma = R e^{i theta}, counter-clockwise. Inner: sigma = r e^{-i theta}, clockwise.
struct BoundarySample {
  Circle circle;
  double theta;
  double s;
  cplx sigma;
  cplx dsigma;
};

BoundarySample boundary_sample(const Annulus& annulus, Circle circle, double theta);

/// Composite trapezoid rule on both circles. Outer nodes come first, each
/// circle in ascending theta from 0; weights are arclength elements.
class QuadratureGrid {
 public:
  static constexpr int kMinNodes = 8;

  static QuadratureGrid build(const Annulus& annulus, int n_per_circle);

  const Annulus& annulus() const noexcept { return annulus_; }
  int n_per_circle() const noexcept { return n_per_circle_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<BoundarySample>& nodes() const& noexcept { return nodes_; }
  const std::vector<double>& weights() const& noexcept { return weights_; }
  // by value on temporaries, so range-for over build(...).nodes() stays valid
  std::vector<BoundarySample> nodes() && { return std::move(nodes_); }
  std::vector<double> weights() && { return std::move(weights_); }

 private:
  QuadratureGrid(Annulus annulus, int n) : annulus_(annulus), n_per_circle_(n) {}

  Annulus annulus_;
  int n_per_circle_;
  std::vector<BoundarySample> nodes_;
  std::vector<double> weights_;
};

/// Sum of weight_j * value_j in node order.
cplx integrate(const QuadratureGrid& grid, std::span<const cplx> values);

struct AdaptiveOptions {
  double tol = 1e-10;
  int n_start = 64;
  int n_max = 1 << 16;
};

template <class T>
struct Converged {
  T value;
  int n_per_circle;
  bool converged;
};

namespace detail {
inline double distance(cplx a, cplx b) { return std::abs(a - b); }
inline double magnitude(cplx a) { return std::abs(a); }
inline double distance(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }
inline double magnitude(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }
}  // namespace detail

/// Doubles the per-circle node count from `n_start` until two successive
/// results agree to tol * max(1, |value|), or `n_max` is reached.
/// `eval` maps a QuadratureGrid to a complex scalar or matrix.
template <class Eval>
auto converge(const Annulus& annulus, Eval&& eval, const AdaptiveOptions& options = {})
    -> Converged<decltype(eval(std::declval<const QuadratureGrid&>()))> {
  using T = decltype(eval(std::declval<const QuadratureGrid&>()));
  int n = std::max(options.n_start, QuadratureGrid::kMinNodes);
  T previous = eval(QuadratureGrid::build(annulus, n));
  while (2 * n <= options.n_max) {
    n *= 2;
    T current = eval(QuadratureGrid::build(annulus, n));
    const double scale = std::max(1.0, detail::magnitude(current));
    if (detail::distance(current, previous) <= options.tol * scale) {
      return {std::move(current), n, true};
    }
    previous = std::move(current);
  }
  return {std::move(previous), n, false};
}

}  // namespace kspectral
