#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "monospec/dominance.hpp"
#include "monospec/realise.hpp"
#include "monospec/sampler.hpp"
#include "support.hpp"

using namespace monospec;
using testsupport::kind_of;

namespace {

const std::vector<std::vector<double>> kM1 = {{0.3, 0.7, 0.0}, {0.2, 0.7, 0.1}, {0.1, 0.7, 0.2}};
const std::vector<std::vector<double>> kM2 = {{0.4, 0.6, 0.0}, {0.3, 0.6, 0.1}, {0.2, 0.6, 0.2}};

MonotoneMatrix monotone(const std::vector<std::vector<double>>& rows) {
  return validate_monotone(validate_stochastic(rows));
}

// Every 3x3 matrix with D(M) = D has the nine entries below for some (m11, m33);
// the grid oracle reports the best smallest entry over a 101 x 101 grid.
double grid_slack(double a, double b, double c, double d) {
  double best = -1e300;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double x = i / 100.0, y = j / 100.0;
      const std::array<double, 9> e = {x,         1 - (x + y - b - d), y - b - d,
                                       x - a,     1 - (x - a + y - d), y - d,
                                       x - a - c, 1 - (x - a - c + y), y};
      best = std::max(best, *std::min_element(e.begin(), e.end()));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("dominance_of examples") {
  const Matrix expect = Matrix::from_rows({{0.1, 0.1}, {0.1, 0.1}});
  CHECK(max_abs_diff(dominance_of(monotone(kM1)).entries(), expect) <= 1e-15);
  CHECK(max_abs_diff(dominance_of(monotone(kM2)).entries(), expect) <= 1e-15);
  CHECK(dominance_of(monotone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).entries() == Matrix::identity(2));
  CHECK(kind_of([] { dominance_of(monotone({{1.0}})); }) == ErrorKind::Dimension);
}

TEST_CASE("check_lemma1 examples") {
  const auto ex = check_lemma1(DominanceMatrix::from_matrix(Matrix::from_rows({{0.1, 0.1}, {0.1, 0.1}})));
  REQUIRE(ex.size() == 8);
  for (const auto& c : ex) CHECK(c.satisfied);

  const auto zero = check_lemma1(DominanceMatrix::from_matrix(Matrix(2, 2)));
  for (const auto& c : zero) CHECK(c.satisfied);
  CHECK(zero[0].slack == 1.0);
  CHECK(zero[3].slack == 0.25);

  const auto swap = check_lemma1(DominanceMatrix::from_matrix(Matrix::from_rows({{0, 1}, {1, 0}})));
  const auto bc = std::find_if(swap.begin(), swap.end(), [](const auto& c) { return c.name == "bc<=1/4"; });
  REQUIRE(bc != swap.end());
  CHECK_FALSE(bc->satisfied);
  CHECK(bc->slack == doctest::Approx(-0.75));
}

TEST_CASE("DominanceMatrix rejects negative entries") {
  CHECK(kind_of([] { DominanceMatrix::from_matrix(Matrix::from_rows({{-0.1, 0}, {0, 0}})); }) ==
        ErrorKind::NegativeEntry);
  const auto d = DominanceMatrix::from_matrix(Matrix::from_rows({{-1e-17, 0}, {0, 0}}));
  CHECK(d.a() == 0.0);
}

TEST_CASE("check_general_properties examples") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = check_general_properties(dominance_of(validate_monotone(validate_stochastic(Matrix::identity(n)))));
    CHECK(r.all_satisfied());
    CHECK(r.min_slack() == 0.0);
  }
  const auto r = check_general_properties(DominanceMatrix::from_matrix(Matrix::from_rows({{0.1, 0.1}, {0.1, 0.1}})));
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0].slack == doctest::Approx(0.8));
  CHECK(r.checks[2].slack == doctest::Approx(0.2));
}

TEST_CASE("general properties hold on sampled 5x5 matrices") {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto r = check_general_properties(dominance_of(sample_one(5, 11, i)));
    REQUIRE(r.all_satisfied());
  }
}

TEST_CASE("check_liftable examples") {
  const auto ex = check_liftable(Matrix::from_rows({{0.1, 0.1}, {0.1, 0.1}}));
  REQUIRE(ex.feasible());
  CHECK(ex.witness->m11 == doctest::Approx(0.2));
  CHECK(ex.witness->m33 == doctest::Approx(0.2));

  const auto zero = check_liftable(Matrix(2, 2));
  REQUIRE(zero.feasible());
  CHECK(lift(Matrix(2, 2), *zero.witness).entries() == Matrix::from_rows({{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}));

  const auto swap = check_liftable(Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK_FALSE(swap.feasible());
  CHECK(swap.violated == "m11+m33<=1+a+d");
  CHECK(swap.slack == doctest::Approx(-1.0));

  CHECK(kind_of([] { check_liftable(Matrix::from_rows({{-1, 0}, {0, 0}})); }) == ErrorKind::NegativeEntry);
}

TEST_CASE("lift examples") {
  const Matrix d1 = Matrix::from_rows({{0.1, 0.1}, {0.1, 0.1}});
  const auto m1 = lift(d1, {0.3, 0.2});
  CHECK(max_abs_diff(m1.entries(), Matrix::from_rows(kM1)) <= 1e-15);

  const Matrix dh = Matrix::from_rows({{0.5, 0}, {0, 0.5}});
  const auto mh = lift(dh, {0.5, 0.5});
  CHECK(mh.entries() == Matrix::from_rows({{0.5, 0.5, 0}, {0, 1, 0}, {0, 0.5, 0.5}}));
  CHECK(max_abs_diff(dominance_of(mh).entries(), dh) <= 1e-15);

  CHECK(kind_of([&] { lift(d1, {0.1, 0.2}); }) == ErrorKind::WitnessInvalid);
  CHECK(kind_of([&] { lift(d1, {0.9, 0.9}); }) == ErrorKind::WitnessInvalid);
}

TEST_CASE("check_liftable agrees with the entrywise grid oracle") {
  int compared = 0;
  for (std::uint64_t i = 0; i < 600; ++i) {
    SampleRng rng(2024, i);
    const double a = 0.8 * rng.uniform(), b = 0.8 * rng.uniform();
    const double c = 0.8 * rng.uniform(), d = 0.8 * rng.uniform();
    const double slack = grid_slack(a, b, c, d);
    if (std::abs(slack) <= 0.02) continue;
    ++compared;
    const auto check = check_liftable(Matrix::from_rows({{a, b}, {c, d}}));
    CHECK(check.feasible() == (slack > 0));
  }
  CHECK(compared > 300);
}

TEST_CASE("sampled 3x3 matrices satisfy the eight constraints and round-trip through the lift") {
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const auto m = sample_one(3, 3, i);
    const auto d = dominance_of(m);
    for (const auto& c : check_lemma1(d)) REQUIRE(c.slack >= -1e-12);
    const auto check = check_liftable(d.entries());
    REQUIRE(check.feasible());
    const auto back = dominance_of(lift(d.entries(), *check.witness));
    CHECK(max_abs_diff(back.entries(), d.entries()) <= 1e-10);
  }
}

TEST_CASE("dominance is linear along combinations with equal-rows matrices") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = 2 + i % 5;
    const auto m = sample_one(n, 4, i);
    std::vector<double> v(n);
    SampleRng rng(4, 1'000'000 + i);
    double sum = 0.0;
    for (double& x : v) sum += x = rng.uniform();
    for (double& x : v) x /= sum;
    v.back() = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) v.back() -= v[k];
    v.back() = std::max(v.back(), 0.0);
    const auto e = equal_rows_matrix(v, 1e-12);
    const double t = rng.uniform();
    const Matrix lhs = dominance_of(convex_combine(m, e, t)).entries();
    const Matrix dm = dominance_of(m).entries();
    for (std::size_t r = 0; r + 1 < n; ++r) {
      for (std::size_t c = 0; c + 1 < n; ++c) CHECK(std::abs(lhs(r, c) - t * dm(r, c)) <= 1e-12);
    }
  }
}
