#include <doctest.h>

#include <cmath>

#include "kspectral/bounds.hpp"
#include "kspectral/search.hpp"

using namespace kspectral;

namespace {

Matrix off_diagonal(double t) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = t;
  m(1, 0) = 1.0 / t;
  return m;
}

const LaurentFunction kSum({{-1, 1.0}, {1, 1.0}});

}  // namespace

TEST_CASE("gain worked values") {
  const Annulus a = Annulus::make(2.0);
  const QuadratureGrid grid = QuadratureGrid::build(a, 1024);
  CHECK(std::abs(gain(kSum, off_diagonal(1.99), grid) - 2.0 * 1.99 / 2.5) < 1e-9);
  CHECK(std::abs(gain(LaurentFunction::constant(1.0), off_diagonal(1.99), grid) - 1.0) < 1e-12);
  CHECK(std::abs(gain(cplx{0.0, -3.0} * kSum, off_diagonal(1.99), grid) - gain(kSum, off_diagonal(1.99), grid)) < 1e-12);
  CHECK_THROWS_AS(gain(LaurentFunction(0, {0.0, 0.0}), off_diagonal(1.99), grid), Error);

  const Matrix normal = sample_normal(4, 2.0, 0.1, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(gain(random_laurent(-3, 3, seed, a), normal, grid) <= 1.0 + 1e-9);
  }
}

TEST_CASE("asymptotic family gain matches the closed form") {
  const Annulus a = Annulus::make(10.0);
  const QuadratureGrid grid = QuadratureGrid::build(a, 4096);
  const double expected = 2.0 * 9.99 / (10.0 + 0.1);
  CHECK(std::abs(gain(kSum, off_diagonal(9.99), grid) - expected) < 1e-9);
}

TEST_CASE("GainEvaluator agrees with gain and checks its window") {
  const Annulus a = Annulus::make(2.0);
  const Matrix A = sample_quantum(3, 2.0, 0.1, 2);
  const ResolventTable table = converged_resolvents(A, a, {1e-12, 256, 1 << 16});
  const GainEvaluator evaluator(table, -2, 2);
  const LaurentFunction f = random_laurent(-2, 1, 6, a);
  CHECK(std::abs(evaluator(f) - gain(f, table)) < 1e-12);
  CHECK_THROWS_AS(evaluator(LaurentFunction::monomial(3)), Error);
}

TEST_CASE("search_k_lower reaches the known witnesses") {
  const Annulus a = Annulus::make(2.0);
  const SearchResult quantum = search_k_lower(off_diagonal(1.99), a, -2, 2, 400, 8, 0);
  CHECK(quantum.k_lower >= 1.592 - 1e-6);
  CHECK(quantum.k_lower <= 2.18322 + 1e-6);
  CHECK(boundary_sup(quantum.best_f, a) == doctest::Approx(1.0).epsilon(1e-12));

  const SearchResult numerical = search_k_lower(off_diagonal(3.7), a, -2, 2, 400, 8, 0);
  CHECK(numerical.k_lower >= 2.96 - 1e-3);
  CHECK(numerical.k_lower <= 4.09762 + 1e-6);
}

TEST_CASE("search_k_lower is reproducible and its witness is grid independent") {
  const Annulus a = Annulus::make(2.0);
  const Matrix A = sample_quantum(3, 2.0, 0.1, 9);
  const SearchResult first = search_k_lower(A, a, -2, 2, 60, 2, 42);
  const SearchResult second = search_k_lower(A, a, -2, 2, 60, 2, 42);
  CHECK(first.k_lower == second.k_lower);
  CHECK(first.best_f == second.best_f);
  CHECK(first.seed == 42);

  const ResolventTable table = converged_resolvents(A, a, {1e-12, 256, 1 << 16});
  const ResolventTable doubled(QuadratureGrid::build(a, 2 * table.grid().n_per_circle()), A);
  CHECK(std::abs(gain(first.best_f, doubled) - first.k_lower) < 1e-8);
}

TEST_CASE("search on normal members stays at one") {
  const Annulus a = Annulus::make(2.0);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const SearchResult result = search_k_lower(sample_normal(3, 2.0, 0.1, seed), a, -2, 2, 60, 2, seed);
    CHECK(result.k_lower >= 1.0 - 1e-9);
    CHECK(result.k_lower <= 1.0 + 1e-6);
  }
}

TEST_CASE("search validates its budget") {
  const Annulus a = Annulus::make(2.0);
  CHECK_THROWS_AS(search_k_lower(off_diagonal(1.5), a, -1, 1, 0, 1, 0), Error);
}

TEST_CASE("scan shape, monotone ceiling and sandwich") {
  const std::vector<double> R_list{1.5, 2.0, 3.0};
  const std::vector<ScanRow> rows = scan(OperatorClass::Quantum, 2, R_list, 2, {40, 2, 1}, 5);
  REQUIRE(rows.size() == 6);
  for (const ScanRow& row : rows) {
    CHECK(row.status == "ok");
    CHECK(row.k_lower <= row.k_upper_eq10 + 1e-9);
    CHECK(row.k_upper_eq10 <= row.k_upper_closed + 1e-6);
  }
  CHECK(rows[0].k_upper_closed > rows[2].k_upper_closed);
  CHECK(rows[2].k_upper_closed > rows[4].k_upper_closed);

  const std::vector<ScanRow> again = scan(OperatorClass::Quantum, 2, R_list, 2, {40, 2, 1}, 5);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].k_lower == again[i].k_lower);
}
