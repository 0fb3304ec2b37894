#include "doctest.h"

#include <cmath>
#include <numbers>

#include "monospec/regions.hpp"
#include "support.hpp"

using namespace monospec;
using testsupport::kind_of;

namespace {

const double kPhiQuarter = (1.0 + std::sqrt(5.0)) / 4.0;

// Barycentric coordinates with respect to the triangle 1, e^{2pi i/3}, e^{4pi i/3}.
bool inside_triangle(Complex z, double tol) {
  const Complex v0 = 1.0, v1 = std::polar(1.0, 2 * std::numbers::pi / 3), v2 = std::conj(v1);
  const double det = (v1.real() - v0.real()) * (v2.imag() - v0.imag()) -
                     (v2.real() - v0.real()) * (v1.imag() - v0.imag());
  const double l1 = ((z.real() - v0.real()) * (v2.imag() - v0.imag()) -
                     (v2.real() - v0.real()) * (z.imag() - v0.imag())) / det;
  const double l2 = ((v1.real() - v0.real()) * (z.imag() - v0.imag()) -
                     (z.real() - v0.real()) * (v1.imag() - v0.imag())) / det;
  return l1 >= -tol && l2 >= -tol && 1.0 - l1 - l2 >= -tol;
}

}  // namespace

TEST_CASE("xi_n_member examples") {
  CHECK(xi_n_member(1.0, 1).member);
  CHECK_FALSE(xi_n_member(0.5, 1).member);
  const auto v = xi_n_member(-0.5, 3);
  CHECK(v.member);
  CHECK(v.margin == 0.0);
  const auto w = xi_n_member(-0.5, 2);
  CHECK_FALSE(w.member);
  CHECK(w.violated == "lower bound 0");
  CHECK(w.margin == -0.5);
  CHECK(xi_n_member(1.0 + 1e-13, 3, 1e-12).member);
  CHECK_FALSE(xi_n_member(1.0 + 1e-11, 3, 1e-12).member);
  CHECK(kind_of([] { xi_n_member(0.0, 4); }) == ErrorKind::UnsupportedN);
}

TEST_CASE("xi3_pair_member examples") {
  const auto impossible = xi3_pair_member({1.0, -0.5});
  CHECK_FALSE(impossible.member);
  CHECK(impossible.violated == "C4");
  CHECK(xi3_pair_member({0.0, 0.0}).member);
  const auto corner = xi3_pair_member({0.5, -0.5});
  CHECK(corner.member);
  CHECK(corner.margin == 0.0);
  CHECK(xi3_pair_member({1.0, 1.0}).member);
  CHECK(xi3_pair_member({1.0, 0.0}).member);
  CHECK_FALSE(xi3_pair_member({0.2, 0.3}).member);
  // Inside C4 but outside C5.
  const auto c5 = xi3_pair_member({0.95, -0.2});
  CHECK_FALSE(c5.member);
  CHECK(c5.violated == "C5");
}

TEST_CASE("xi3_boundary examples and continuity at the C4/C5 junction") {
  const auto k0 = xi3_boundary(0.0);
  CHECK(k0.curve == Curve::C3);
  CHECK(k0.point.lambda2 == 1.0);
  CHECK(k0.point.lambda3 == 0.0);
  const auto km1 = xi3_boundary(-1.0);
  CHECK(km1.curve == Curve::C4);
  CHECK(km1.point.lambda2 == 0.5);
  CHECK(km1.point.lambda3 == -0.5);

  const double k = -(3.0 - std::sqrt(5.0)) / 2.0;
  const double s_c4 = 1.0 / (2.0 * std::sqrt(-k));
  const double s_c5 = (1.0 + k) / (1.0 + k + k * k);
  CHECK(std::abs(s_c4 - s_c5) <= 1e-12);
  CHECK(std::abs(s_c4 - kPhiQuarter) <= 1e-12);
  CHECK(std::abs(xi3_boundary(k).point.lambda2 - kPhiQuarter) <= 1e-12);
  CHECK(std::abs(kC5Threshold - kPhiQuarter) <= 1e-15);

  CHECK(kind_of([] { xi3_boundary(1.5); }) == ErrorKind::Domain);
  CHECK(kind_of([] { xi3_boundary(-1.01); }) == ErrorKind::Domain);
}

TEST_CASE("boundary points sit on the region edge") {
  for (int i = 0; i < 200; ++i) {
    const double k = -1.0 + 2.0 * i / 199.0;
    const auto b = xi3_boundary(k);
    const auto on = xi3_pair_member(b.point, 1e-9);
    CHECK(on.member);
    CHECK(std::abs(on.margin) <= 1e-9);
    const auto out = xi3_pair_member({1.01 * b.point.lambda2, 1.01 * b.point.lambda3}, 1e-9);
    CHECK_FALSE(out.member);
  }
}

TEST_CASE("star convexity and the containment chain on a grid") {
  for (int i = 0; i <= 120; ++i) {
    for (int j = 0; j <= 120; ++j) {
      const EigenPair p{-0.1 + 1.2 * i / 120.0, -0.6 + 1.7 * j / 120.0};
      if (!xi3_pair_member(p).member) continue;
      for (double t : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        CHECK(xi3_pair_member({t * p.lambda2, t * p.lambda3}).member);
      }
      CHECK(xi_n_member(p.lambda2, 3).member);
      CHECK(xi_n_member(p.lambda3, 3).member);
      CHECK(stochastic3_real_pair_member(p).member);
    }
  }
}

TEST_CASE("theta_member examples") {
  CHECK(theta_member(-1.0, 3).member);
  CHECK(theta_member(std::polar(1.0, 2 * std::numbers::pi / 3), 3, 1e-12).member);
  const auto far = theta_member({-0.8, 0.3}, 3);
  CHECK_FALSE(far.member);
  CHECK_FALSE(inside_triangle({-0.8, 0.3}, 0.0));
  CHECK(theta_member(0.5, 3).member);
  CHECK(theta_member({0.0, 0.5}, 3).member);
  CHECK_FALSE(theta_member({0.0, 0.6}, 3).member);
  CHECK(theta_member(-1.0, 2).member);
  CHECK_FALSE(theta_member({0.0, 0.1}, 2).member);
  CHECK_FALSE(theta_member(1.5, 2).member);
  CHECK(kind_of([] { theta_member(0.0, 4); }) == ErrorKind::UnsupportedN);
}

TEST_CASE("theta3 agrees with a barycentric oracle") {
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const Complex z{-1.2 + 2.4 * i / 100.0, -1.1 + 2.2 * j / 100.0};
      const bool on_segment = z.imag() == 0.0 && z.real() >= -1.0 && z.real() <= 0.5;
      const bool oracle = on_segment || inside_triangle(z, 0.0);
      const auto v = theta_member(z, 3, 0.0);
      // Exact-boundary grid points may flip by rounding; skip those within 1e-12.
      if (!inside_triangle(z, 1e-12) || inside_triangle(z, -1e-12) || on_segment) CHECK(v.member == oracle);
    }
  }
}

TEST_CASE("theta3 contains xi3 on the reals") {
  for (int i = 0; i <= 300; ++i) CHECK(theta_member(-0.5 + 1.5 * i / 300.0, 3).member);
}

TEST_CASE("stochastic3_real_pair_member examples") {
  CHECK(stochastic3_real_pair_member({1.0, -1.0}).member);
  const auto v = stochastic3_real_pair_member({-0.4, -0.7});
  CHECK_FALSE(v.member);
  CHECK(v.violated == "trace>=0");
  CHECK(v.margin == doctest::Approx(-0.1));
  CHECK(stochastic3_real_pair_member({0.0, 0.0}).member);
}

TEST_CASE("region names round trip") {
  for (Region r : {Region::Xi1, Region::Xi2, Region::Xi3, Region::Xi3Pair, Region::Theta2, Region::Theta3,
                   Region::S3RealPair}) {
    CHECK(parse_region(region_name(r)) == r);
  }
  CHECK_FALSE(parse_region("xi4"));
}
