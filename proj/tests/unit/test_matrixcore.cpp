#include "doctest.h"

#include <cmath>
#include <limits>

#include "monospec/matrix.hpp"
#include "monospec/sampler.hpp"
#include "support.hpp"

using namespace monospec;
using testsupport::kind_of;

namespace {

const std::vector<std::vector<double>> kM1 = {{0.3, 0.7, 0.0}, {0.2, 0.7, 0.1}, {0.1, 0.7, 0.2}};

// Direct check of the suffix-sum definition with no shared code.
bool dominance_by_definition(const Matrix& m, double tol) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      double lower = 0.0, upper = 0.0;
      for (std::size_t j = r; j < n; ++j) {
        upper += m(k, j);
        lower += m(k + 1, j);
      }
      if (lower < upper - tol) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_stochastic accepts the identity and M1") {
  const auto id = validate_stochastic(Matrix::identity(3));
  CHECK(id.entries() == Matrix::identity(3));
  const auto m1 = validate_stochastic(kM1);
  CHECK(m1.n() == 3);
  CHECK(m1(1, 2) == doctest::Approx(0.1));
}

TEST_CASE("validate_stochastic error kinds") {
  CHECK(kind_of([] { validate_stochastic({{0.5, 0.6}, {0.0, 1.0}}); }) == ErrorKind::RowSum);
  CHECK(kind_of([] { validate_stochastic({{-0.1, 1.1}, {0.0, 1.0}}); }) == ErrorKind::NegativeEntry);
  CHECK(kind_of([] { validate_stochastic(Matrix(2, 3)); }) == ErrorKind::Dimension);
  CHECK(kind_of([] { validate_stochastic({{1.0, 0.0}, {1.0}}); }) == ErrorKind::Dimension);
  CHECK(kind_of([] { validate_stochastic(Matrix(0, 0)); }) == ErrorKind::Dimension);
  CHECK(kind_of([] { validate_stochastic(Matrix::identity(33)); }) == ErrorKind::Dimension);
  CHECK(kind_of([] { validate_stochastic(Matrix::identity(2), 0.0); }) == ErrorKind::Domain);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(kind_of([&] { validate_stochastic({{nan, 1.0}, {0.0, 1.0}}); }) == ErrorKind::NegativeEntry);
}

TEST_CASE("validate_stochastic clamps tiny negatives and renormalizes") {
  const auto s = validate_stochastic({{-1e-17, 1.0}, {0.5, 0.5 + 5e-13}});
  CHECK(s(0, 0) == 0.0);
  CHECK(s(1, 0) + s(1, 1) == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(std::abs(s(1, 0) + s(1, 1) - 1.0) <= 2.3e-16);
}

TEST_CASE("n = 1 is the matrix (1)") {
  const auto one = validate_monotone(validate_stochastic({{1.0}}));
  CHECK(one.n() == 1);
  CHECK(prefix_sums(one).table.empty());
  CHECK(kind_of([] { validate_stochastic({{0.5}}); }) == ErrorKind::RowSum);
}

TEST_CASE("validate_monotone examples") {
  CHECK_NOTHROW(validate_monotone(validate_stochastic(Matrix::identity(3))));
  CHECK_NOTHROW(validate_monotone(validate_stochastic(kM1)));
  try {
    validate_monotone(validate_stochastic({{0.0, 1.0}, {1.0, 0.0}}));
    FAIL("expected MonotoneViolation");
  } catch (const MonotoneViolation& e) {
    CHECK(e.kind() == ErrorKind::MonotoneViolation);
    CHECK(e.row() == 1);
    CHECK(e.column() == 2);
    CHECK(e.deficit() == doctest::Approx(1.0));
  }
}

TEST_CASE("first violation is reported in (k, r) order") {
  const auto s = validate_stochastic({{0.2, 0.8, 0.0}, {0.2, 0.8, 0.0}, {0.5, 0.5, 0.0}});
  const auto v = first_dominance_violation(s);
  REQUIRE(v);
  CHECK(v->k == 2);
  CHECK(v->r == 2);
  CHECK(v->deficit == doctest::Approx(0.3));
}

TEST_CASE("prefix_sums examples") {
  const auto id = prefix_sums(validate_stochastic(Matrix::identity(3)));
  CHECK(id.table == Matrix::from_rows({{1, 1}, {0, 1}, {0, 0}}));
  const auto m1 = prefix_sums(validate_stochastic(kM1));
  const Matrix expect = Matrix::from_rows({{0.3, 1.0}, {0.2, 0.9}, {0.1, 0.8}});
  CHECK(max_abs_diff(m1.table, expect) <= 1e-15);
  CHECK(is_column_non_increasing(m1, kDefaultTol));
}

TEST_CASE("convex_combine examples") {
  const auto a = validate_stochastic(Matrix::identity(2));
  const auto b = validate_stochastic({{0.0, 1.0}, {0.0, 1.0}});
  CHECK(convex_combine(a, b, 1.0).entries() == a.entries());
  CHECK(convex_combine(a, b, 0.0).entries() == b.entries());
  CHECK(convex_combine(a, b, 0.5).entries() == Matrix::from_rows({{0.5, 0.5}, {0.0, 1.0}}));
  CHECK(kind_of([&] { convex_combine(a, b, 1.5); }) == ErrorKind::Domain);
  const auto c = validate_stochastic(Matrix::identity(3));
  CHECK(kind_of([&] { convex_combine(a, c, 0.5); }) == ErrorKind::Dimension);
}

TEST_CASE("monotone validation agrees with the prefix-sum path and the definition") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + i % 5;
    SampleRng rng(99, i);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      double sum = 0.0;
      for (std::size_t c = 0; c < n; ++c) sum += m(r, c) = rng.uniform() < 0.3 ? 0.0 : rng.uniform();
      if (sum == 0.0) m(r, 0) = sum = 1.0;
      for (std::size_t c = 0; c < n; ++c) m(r, c) /= sum;
    }
    // A third of the cases start monotone so both verdicts are exercised.
    if (i % 3 == 0) m = sample_one(n, 98, i).entries();
    const auto s = validate_stochastic(m, 1e-12);
    const bool by_validator = !first_dominance_violation(s).has_value();
    CHECK(by_validator == is_column_non_increasing(prefix_sums(s), 1e-12));
    CHECK(by_validator == dominance_by_definition(s.entries(), 1e-12));
  }
}

TEST_CASE("convex combinations of monotone matrices stay monotone") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = 2 + i % 6;
    const auto a = sample_one(n, 5, 2 * i);
    const auto b = sample_one(n, 5, 2 * i + 1);
    for (double t : {0.0, 0.13, 0.5, 0.87, 1.0}) {
      const auto c = convex_combine(a, b, t);
      CHECK(is_column_non_increasing(prefix_sums(c), 1e-12));
    }
  }
}
