#include "kspectral/functions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "kspectral/errors.hpp"

namespace kspectral {

LaurentFunction::LaurentFunction(int k_min, std::vector<cplx> coeffs)
    : k_min_(k_min), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DegenerateFunction, "empty coefficient list");
}

LaurentFunction::LaurentFunction(std::initializer_list<std::pair<int, cplx>> terms) : k_min_(0) {
  if (terms.size() == 0) throw Error(ErrorCode::DegenerateFunction, "empty coefficient list");
  int lo = terms.begin()->first;
  int hi = lo;
  for (const auto& [k, c] : terms) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  k_min_ = lo;
  coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), cplx{0.0});
  for (const auto& [k, c] : terms) coeffs_[static_cast<std::size_t>(k - lo)] += c;
}

cplx LaurentFunction::coeff(int k) const noexcept {
  if (k < k_min_ || k > k_max()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

cplx LaurentFunction::operator()(cplx z) const {
  const int hi = k_max();
  cplx positive = 0.0;
  if (hi >= 0) {
    for (int k = hi; k >= std::max(k_min_, 0); --k) positive = positive * z + coeff(k);
    if (k_min_ > 0) positive *= std::pow(z, k_min_);
  }
  cplx negative = 0.0;
  if (k_min_ < 0) {
    if (z == cplx{0.0}) throw Error(ErrorCode::EvalAtZero, "negative exponent evaluated at z = 0");
    const cplx w = 1.0 / z;
    const int top = -k_min_;
    const int bottom = std::max(1, -hi);
    for (int m = top; m >= bottom; --m) negative = negative * w + coeff(-m);
    negative *= std::pow(w, bottom);
  }
  return positive + negative;
}

bool LaurentFunction::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{0.0}; });
}

LaurentFunction operator*(cplx scale, LaurentFunction f) {
  for (auto& c : f.coeffs_) c *= scale;
  return f;
}

LaurentFunction operator+(const LaurentFunction& a, const LaurentFunction& b) {
  const int lo = std::min(a.k_min(), b.k_min());
  const int hi = std::max(a.k_max(), b.k_max());
  std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k) coeffs[static_cast<std::size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
  return LaurentFunction(lo, std::move(coeffs));
}

namespace {

const std::vector<cplx>& unit_roots(int n) {
  thread_local std::vector<cplx> roots;
  if (static_cast<int>(roots.size()) != n) {
    roots.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * kPi * j / n);
  }
  return roots;
}

// On |z| = radius, |f(radius w)| = |sum_m c_{k_min+m} radius^{k_min+m} w^m| since |w^{k_min}| = 1.
double circle_sup(const LaurentFunction& f, double radius, int n) {
  thread_local std::vector<cplx> scaled;
  thread_local std::vector<double> modulus;
  scaled.resize(f.coeffs().size());
  double power = std::pow(radius, f.k_min());
  for (std::size_t m = 0; m < scaled.size(); ++m, power *= radius) scaled[m] = f.coeffs()[m] * power;
  // squared modulus; the parabolic refinement works on |f|^2
  const auto modulus_at = [&](cplx w) {
    double re = 0.0;
    double im = 0.0;
    for (auto it = scaled.rbegin(); it != scaled.rend(); ++it) {
      const double next_re = re * w.real() - im * w.imag() + it->real();
      im = re * w.imag() + im * w.real() + it->imag();
      re = next_re;
    }
    return re * re + im * im;
  };

  const auto& roots = unit_roots(n);
  modulus.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) modulus[static_cast<std::size_t>(j)] = modulus_at(roots[static_cast<std::size_t>(j)]);

  const double h = 2.0 * kPi / n;
  double best = *std::max_element(modulus.begin(), modulus.end());
  for (int j = 0; j < n; ++j) {
    const double left = modulus[static_cast<std::size_t>((j + n - 1) % n)];
    const double mid = modulus[static_cast<std::size_t>(j)];
    const double right = modulus[static_cast<std::size_t>((j + 1) % n)];
    if (mid < left || mid < right) continue;
    const double curvature = left - 2.0 * mid + right;
    if (!(curvature < 0.0)) continue;
    // vertex of the parabola through the three samples, in units of h
    const double offset = 0.5 * (left - right) / curvature;
    if (std::abs(offset) > 1.0) continue;
    best = std::max(best, modulus_at(std::polar(1.0, h * (j + offset))));
  }
  return std::sqrt(best);
}

}  // namespace

double boundary_sup(const LaurentFunction& f, const Annulus& annulus, int resolution) {
  const int n = std::max(resolution, 8 * f.span());
  return std::max(circle_sup(f, annulus.outer(), n), circle_sup(f, annulus.inner(), n));
}

LaurentFunction rotate(const LaurentFunction& f, double phi) {
  LaurentFunction out = f;
  for (int k = f.k_min(); k <= f.k_max(); ++k) {
    out.coeffs()[static_cast<std::size_t>(k - f.k_min())] *= std::polar(1.0, k * phi);
  }
  return out;
}

LaurentFunction invert(const LaurentFunction& f) {
  std::vector<cplx> coeffs(f.coeffs().rbegin(), f.coeffs().rend());
  return LaurentFunction(-f.k_max(), std::move(coeffs));
}

LaurentFunction random_laurent(int k_min, int k_max, std::uint64_t seed, const Annulus& annulus) {
  if (k_min > k_max) {
    throw Error(ErrorCode::DegenerateFunction,
                "empty exponent range [" + std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<cplx> coeffs(static_cast<std::size_t>(k_max - k_min + 1));
  for (auto& c : coeffs) {
    const double re = normal(rng);
    const double im = normal(rng);
    c = {re, im};
  }
  LaurentFunction f(k_min, std::move(coeffs));
  const double sup = boundary_sup(f, annulus);
  if (f.is_zero() || !(sup > 0.0)) throw Error(ErrorCode::DegenerateFunction, "all coefficients vanished");
  return (1.0 / sup) * f;
}

}  // namespace kspectral
