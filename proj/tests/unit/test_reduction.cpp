#include "doctest.h"

#include <cmath>

#include "monospec/realise.hpp"
#include "monospec/reduction.hpp"
#include "monospec/sampler.hpp"
#include "support.hpp"

using namespace monospec;
using testsupport::kind_of;

namespace {

MonotoneMatrix monotone(const Matrix& m) { return validate_monotone(validate_stochastic(m)); }

// Block-diagonal embedding of m with one extra absorbing state appended.
Matrix with_absorbing_state(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix out(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, j);
  }
  out(n, n) = 1.0;
  return out;
}

void check_block_laws(const ReductionResult& r) {
  for (const auto& blk : r.blocks) {
    if (blk.degenerate) {
      for (const Complex& z : blk.lambda.values) CHECK(z == Complex{});
      continue;
    }
    REQUIRE(blk.s.has_value());
    CHECK(blk.row_sum_error <= 1e-10);
    CHECK(blk.r > 0.0);
    CHECK(blk.r <= 1.0 + 1e-12);
    std::vector<Complex> scaled;
    for (const Complex& mu : blk.mu.values) scaled.push_back(mu * blk.r);
    CHECK(spectrum_distance(scaled, blk.lambda.values) <= 1e-8);
  }
  for (const auto& lm : r.lambda_map) {
    CHECK(std::abs(lm.mu * r.blocks[lm.block].r - lm.lambda) <= 1e-8);
    CHECK(std::abs(lm.mu) >= std::abs(lm.lambda) - 1e-9);
  }
}

}  // namespace

TEST_CASE("equal rows give a single degenerate report") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    v.back() = 1.0 - (n - 1) * (1.0 / static_cast<double>(n));
    const auto r = reduce(equal_rows_matrix(v, 1e-12));
    CHECK(r.dominance == Matrix(n - 1, n - 1));
    CHECK(r.lambda_map.empty());
    CHECK(r.degenerate.size() == r.blocks.size());
    const auto spec = r.nontrivial_spectrum();
    CHECK(spec.size() == n - 1);
    for (const Complex& z : spec) CHECK(z == Complex{});
  }
}

TEST_CASE("worked 3x3 example reduces to a rank-one stochastic matrix") {
  const auto m = monotone(Matrix::from_rows({{0.3, 0.7, 0.0}, {0.2, 0.7, 0.1}, {0.1, 0.7, 0.2}}));
  const auto r = reduce(m);
  REQUIRE(r.blocks.size() == 1);
  const auto& blk = r.blocks[0];
  CHECK_FALSE(blk.degenerate);
  CHECK(blk.r == doctest::Approx(0.2).epsilon(1e-14));
  REQUIRE(blk.s.has_value());
  CHECK(max_abs_diff(blk.s->entries(), Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}})) <= 1e-14);
  CHECK(spectrum_distance(blk.mu.values, std::vector<Complex>{1.0, 0.0}) <= 1e-12);
  CHECK(spectrum_distance(blk.lambda.values, std::vector<Complex>{0.2, 0.0}) <= 1e-12);
  check_block_laws(r);
}

TEST_CASE("identity splits into unit blocks") {
  const auto r = reduce(monotone(Matrix::identity(4)));
  CHECK(r.blocks.size() == 3);
  CHECK(r.degenerate.empty());
  for (const auto& blk : r.blocks) CHECK(blk.r == doctest::Approx(1.0));
  check_block_laws(r);
}

TEST_CASE("reduce rejects n = 1") {
  CHECK(kind_of([] { reduce(monotone(Matrix::identity(1))); }) == ErrorKind::Dimension);
}

TEST_CASE("block laws and the union property on samples") {
  for (std::size_t n : {3u, 4u, 5u, 6u}) {
    for (std::uint64_t i = 0; i < 1500; ++i) {
      const auto m = sample_one(n, 31, i);
      const auto r = reduce(m);
      check_block_laws(r);
      const auto whole = spectrum_of_dominance(dominance_of(m));
      CHECK(spectrum_distance(r.nontrivial_spectrum(), whole.values) <= 1e-8);
      std::size_t covered = 0;
      for (const auto& blk : r.blocks) covered += blk.indices.size();
      CHECK(covered == n - 1);
    }
  }
}

TEST_CASE("check_containment examples") {
  const auto half = family_matrix({Family::Type2, 0.0});
  const auto embedded = validate_monotone(validate_stochastic(with_absorbing_state(half.entries())));
  const auto spec = spectrum_of_dominance(dominance_of(embedded));
  CHECK(spectrum_distance(spec.values, std::vector<Complex>{1.0, 0.5, -0.5}) <= 1e-12);
  for (const auto& v : check_containment(embedded)) CHECK(v.member);

  const std::vector<double> v = {0.1, 0.2, 0.3, 0.4};
  const auto flat = check_containment(equal_rows_matrix(v));
  CHECK(flat.size() == 3);
  for (const auto& verdict : flat) CHECK(verdict.member);

  CHECK(kind_of([] { check_containment(sample_one(3, 1, 0)); }) == ErrorKind::UnsupportedN);
  CHECK(kind_of([] { check_containment(sample_one(5, 1, 0)); }) == ErrorKind::UnsupportedN);
}

TEST_CASE("sampled 4x4 spectra stay inside theta3") {
  for (std::uint64_t i = 0; i < 3000; ++i) {
    for (const auto& v : check_containment(sample_one(4, 77, i))) REQUIRE(v.member);
  }
}
