#include "kspectral/geometry.hpp"

#include <string>

namespace kspectral {

Annulus Annulus::make(double R) {
  if (!(R > 1.0 + kMinThickness) || !std::isfinite(R)) {
    throw Error(ErrorCode::InvalidRadius, "outer radius must exceed 1 + 1e-6, got " + std::to_string(R));
  }
  return Annulus(R);
}

bool Annulus::contains(cplx z, double margin) const noexcept {
  const double modulus = std::abs(z);
  return modulus > inner() + margin && modulus < outer() - margin;
}

BoundarySample boundary_sample(const Annulus& annulus, Circle circle, double theta) {
  const cplx phase = std::polar(1.0, circle == Circle::Outer ? theta : -theta);
  if (circle == Circle::Outer) {
    const double R = annulus.outer();
    return {circle, theta, R * theta, R * phase, kI * phase};
  }
  const double r = annulus.inner();
  return {circle, theta, r * (theta - 2.0 * kPi), r * phase, -kI * phase};
}

QuadratureGrid QuadratureGrid::build(const Annulus& annulus, int n_per_circle) {
  if (n_per_circle < kMinNodes) {
    throw Error(ErrorCode::GridTooCoarse,
                "need at least 8 nodes per circle, got " + std::to_string(n_per_circle));
  }
  QuadratureGrid grid(annulus, n_per_circle);
  const auto n = static_cast<std::size_t>(n_per_circle);
  grid.nodes_.reserve(2 * n);
  grid.weights_.reserve(2 * n);
  const double step = 2.0 * kPi / n_per_circle;
  for (Circle circle : {Circle::Outer, Circle::Inner}) {
    const double radius = circle == Circle::Outer ? annulus.outer() : annulus.inner();
    for (std::size_t j = 0; j < n; ++j) {
      grid.nodes_.push_back(boundary_sample(annulus, circle, step * static_cast<double>(j)));
      grid.weights_.push_back(radius * step);
    }
  }
  return grid;
}

cplx integrate(const QuadratureGrid& grid, std::span<const cplx> values) {
  if (values.size() != grid.size()) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(grid.size()) + " values, got " +
                                               std::to_string(values.size()));
  }
  cplx sum = 0.0;
  const auto& weights = grid.weights();
  for (std::size_t j = 0; j < values.size(); ++j) sum += weights[j] * values[j];
  return sum;
}

}  // namespace kspectral
