#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "kspectral/geometry.hpp"
#include "kspectral/linalg.hpp"

namespace kspectral {

/// Laurent polynomial f(z) = sum_{k_min <= k <= k_max} c_k z^k.
///
/// Coefficients are stored densely from k_min upward. The exponent range is
/// never empty; zero coefficients are kept as given.
class LaurentFunction {
 public:
  LaurentFunction(int k_min, std::vector<cplx> coeffs);
  LaurentFunction(std::initializer_list<std::pair<int, cplx>> terms);

  static LaurentFunction constant(cplx c) { return LaurentFunction(0, {c}); }
  static LaurentFunction monomial(int k, cplx c = 1.0) { return LaurentFunction(k, {c}); }

  int k_min() const noexcept { return k_min_; }
  int k_max() const noexcept { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  std::vector<cplx>& coeffs() noexcept { return coeffs_; }

  /// c_k, or zero outside the stored range.
  cplx coeff(int k) const noexcept;

  /// Horner in z for k >= 0 and in 1/z for k < 0. Throws EvalAtZero when z = 0
  /// and a negative exponent is present.
  cplx operator()(cplx z) const;

  bool is_zero() const noexcept;

  friend LaurentFunction operator*(cplx scale, LaurentFunction f);
  friend LaurentFunction operator+(const LaurentFunction& a, const LaurentFunction& b);
  friend bool operator==(const LaurentFunction& a, const LaurentFunction& b) = default;

 private:
  int k_min_;
  std::vector<cplx> coeffs_;
};

inline cplx eval(const LaurentFunction& f, cplx z) { return f(z); }

/// Default dense sampling per circle used by boundary_sup.
inline constexpr int kDefaultSupResolution = 1024;

/// max |f| over both boundary circles (equal to the sup over the closed
/// annulus by the maximum principle). Dense theta sampling followed by one
/// parabolic refinement at every discrete local maximizer. The resolution is
/// raised to 8 * span when given lower.
double boundary_sup(const LaurentFunction& f, const Annulus& annulus,
                    int resolution = kDefaultSupResolution);

/// f(z e^{i phi}).
LaurentFunction rotate(const LaurentFunction& f, double phi);

/// f(1/z).
LaurentFunction invert(const LaurentFunction& f);

/// i.i.d. complex standard Gaussian coefficients on [k_min, k_max], scaled so
/// that boundary_sup over `annulus` is 1.
LaurentFunction random_laurent(int k_min, int k_max, std::uint64_t seed, const Annulus& annulus);

}  // namespace kspectral
