#include <doctest.h>

#include <cmath>
#include <random>

#include "kspectral/functions.hpp"
#include "oracles.hpp"

using namespace kspectral;

namespace {

LaurentFunction gaussian_laurent(std::mt19937_64& rng, int k_min, int k_max) {
  std::normal_distribution<double> normal;
  std::vector<cplx> coeffs(static_cast<std::size_t>(k_max - k_min + 1));
  for (auto& c : coeffs) c = {normal(rng), normal(rng)};
  return LaurentFunction(k_min, coeffs);
}

}  // namespace

TEST_CASE("eval on the documented examples") {
  CHECK(std::abs(LaurentFunction({{1, 1.0}})(cplx{0.0, 2.0}) - cplx{0.0, 2.0}) < 1e-15);
  CHECK(std::abs(LaurentFunction({{-1, 1.0}, {1, 1.0}})(0.5) - 2.5) < 1e-15);
  CHECK(LaurentFunction::constant(1.0)(std::polar(3.0, 1.0)) == cplx{1.0});
  CHECK(LaurentFunction::constant(1.0)(0.0) == cplx{1.0});
}

TEST_CASE("eval matches term-by-term powers for mixed exponent ranges") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto [lo, hi] : {std::pair{-4, 3}, std::pair{2, 5}, std::pair{-6, -2}, std::pair{0, 0}}) {
    const LaurentFunction f = gaussian_laurent(rng, lo, hi);
    for (int trial = 0; trial < 20; ++trial) {
      const cplx z = std::polar(0.4 + 2.0 * unit(rng), 6.28 * unit(rng));
      const cplx expected = oracle::laurent(lo, f.coeffs(), z);
      CHECK(std::abs(f(z) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("eval at zero with a negative exponent is an error") {
  try {
    LaurentFunction({{-1, 1.0}})(0.0);
    FAIL("expected EvalAtZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvalAtZero);
  }
}

TEST_CASE("boundary_sup examples") {
  const Annulus a = Annulus::make(2.0);
  CHECK(boundary_sup(LaurentFunction({{1, 1.0}}), a) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(boundary_sup(LaurentFunction({{-1, 1.0}, {1, 1.0}}), a) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(boundary_sup(LaurentFunction::constant(1.0), a) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("boundary_sup agrees with a brute-force sweep") {
  std::mt19937_64 rng(5);
  for (double R : {1.2, 2.0, 5.0}) {
    const Annulus a = Annulus::make(R);
    for (int trial = 0; trial < 5; ++trial) {
      const LaurentFunction f = gaussian_laurent(rng, -3, 3);
      const double expected = std::max(oracle::circle_sup_bruteforce(f.k_min(), f.coeffs(), R),
                                       oracle::circle_sup_bruteforce(f.k_min(), f.coeffs(), 1.0 / R));
      const double got = boundary_sup(f, a);
      CHECK(got <= expected * (1.0 + 1e-12));
      CHECK(got >= expected * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("rotate and invert") {
  const LaurentFunction z({{1, 1.0}});
  const LaurentFunction rotated = rotate(z, kPi);
  CHECK(std::abs(rotated.coeff(1) - cplx{-1.0}) < 1e-15);
  CHECK(rotate(z, 0.0) == z);

  const LaurentFunction inverted = invert(z);
  CHECK(inverted.k_min() == -1);
  CHECK(inverted.coeff(-1) == cplx{1.0});

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Annulus a = Annulus::make(2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentFunction f = gaussian_laurent(rng, -2, 3);
    const double phi = 6.28 * unit(rng);
    const cplx w = std::polar(0.6 + unit(rng), 6.28 * unit(rng));
    CHECK(std::abs(rotate(f, phi)(w) - f(w * std::polar(1.0, phi))) < 1e-12 * std::max(1.0, std::abs(f(w))));
    CHECK(std::abs(invert(f)(w) - f(1.0 / w)) < 1e-12 * std::max(1.0, std::abs(f(w))));
    CHECK(invert(invert(f)) == f);
    const double sup = boundary_sup(f, a);
    CHECK(boundary_sup(rotate(f, phi), a) == doctest::Approx(sup).epsilon(1e-9));
    CHECK(boundary_sup(invert(f), a) == doctest::Approx(sup).epsilon(1e-12));
    const cplx c{0.3, -1.7};
    CHECK(boundary_sup(c * f, a) == doctest::Approx(std::abs(c) * sup).epsilon(1e-12));
  }
}

TEST_CASE("random_laurent is seeded and normalized") {
  const Annulus a = Annulus::make(2.0);
  const LaurentFunction f = random_laurent(-2, 2, 42, a);
  CHECK(f.span() == 5);
  CHECK(f == random_laurent(-2, 2, 42, a));
  CHECK_FALSE(f == random_laurent(-2, 2, 43, a));
  CHECK(std::abs(boundary_sup(f, a) - 1.0) < 1e-12);

  try {
    random_laurent(2, 1, 0, a);
    FAIL("expected DegenerateFunction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFunction);
  }
}
