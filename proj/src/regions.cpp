#include "monospec/regions.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>

namespace monospec {

namespace {

using Slack = std::pair<const char*, double>;

/// Fold named slacks into a verdict. The first violated constraint, in the order
/// given, names the failure.
RegionVerdict fold(std::initializer_list<Slack> slacks, double tol) {
  RegionVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  for (const auto& [name, s] : slacks) {
    v.margin = std::min(v.margin, s);
    if (s < -tol && v.violated.empty()) v.violated = name;
  }
  v.member = v.margin >= -tol;
  return v;
}

/// Signed distance of z to the line through p, q; positive on the left.
double edge_distance(Complex p, Complex q, Complex z) {
  const Complex e = q - p;
  const Complex w = z - p;
  return (e.real() * w.imag() - e.imag() * w.real()) / std::abs(e);
}

}  // namespace

std::string_view curve_name(Curve c) noexcept {
  static constexpr std::array<std::string_view, 5> kNames = {"C1", "C2", "C3", "C4", "C5"};
  return kNames[static_cast<std::size_t>(c)];
}

std::string_view region_name(Region r) noexcept {
  switch (r) {
    case Region::Xi1: return "xi1";
    case Region::Xi2: return "xi2";
    case Region::Xi3: return "xi3";
    case Region::Xi3Pair: return "xi3pair";
    case Region::Theta2: return "theta2";
    case Region::Theta3: return "theta3";
    case Region::S3RealPair: return "s3realpair";
  }
  return "";
}

std::optional<Region> parse_region(std::string_view name) noexcept {
  for (Region r : {Region::Xi1, Region::Xi2, Region::Xi3, Region::Xi3Pair, Region::Theta2,
                   Region::Theta3, Region::S3RealPair}) {
    if (region_name(r) == name) return r;
  }
  return std::nullopt;
}

RegionVerdict xi_n_member(double lambda, int n, double tol) {
  switch (n) {
    case 1: return fold({{"equals 1", -std::abs(lambda - 1.0)}}, tol);
    case 2: return fold({{"lower bound 0", lambda}, {"upper bound 1", 1.0 - lambda}}, tol);
    case 3: return fold({{"lower bound -1/2", lambda + 0.5}, {"upper bound 1", 1.0 - lambda}}, tol);
    default:
      throw Error(ErrorKind::UnsupportedN,
                  "single-eigenvalue region known only for n <= 3, got " + std::to_string(n));
  }
}

RegionVerdict xi3_pair_member(const EigenPair& p, double tol) {
  const double l2 = p.lambda2, l3 = p.lambda3;
  const bool c5_active = l3 <= tol && l2 >= kC5Threshold - tol;
  const double c5 = c5_active ? -(l2 * l2 + l2 * l3 + l3 * l3 - l2 - l3)
                              : std::numeric_limits<double>::infinity();
  return fold({{"C1", l2 - l3},
               {"C2", l2 + l3},
               {"C3", 1.0 - l2},
               {"C4", l2 * l3 + 0.25},
               {"C5", c5}},
              tol);
}

BoundaryPoint xi3_boundary(double k) {
  if (!(k >= -1.0 && k <= 1.0)) {
    throw Error(ErrorKind::Domain, "ray slope must lie in [-1, 1], got " + std::to_string(k));
  }
  if (k >= 0.0) return {{1.0, k}, Curve::C3};
  if (-k >= kC4C5Slope) {
    // On C4, lambda2 * lambda3 = -1/4; at k = -1 this is the C2 corner (1/2, -1/2).
    const double s = k == -1.0 ? 0.5 : 1.0 / (2.0 * std::sqrt(-k));
    return {{s, k * s}, Curve::C4};
  }
  const double s = (1.0 + k) / (1.0 + k + k * k);
  return {{s, k * s}, Curve::C5};
}

RegionVerdict theta_member(Complex z, int n, double tol) {
  const double re = z.real(), im = z.imag();
  if (n == 2) {
    return fold({{"imaginary part 0", -std::abs(im)},
                 {"lower bound -1", re + 1.0},
                 {"upper bound 1", 1.0 - re}},
                tol);
  }
  if (n != 3) {
    throw Error(ErrorKind::UnsupportedN,
                "stochastic region implemented only for n = 2, 3, got " + std::to_string(n));
  }
  // Closed triangle conv{1, w, w^2}, vertices counter-clockwise.
  const Complex v0{1.0, 0.0};
  const Complex v1{-0.5, std::numbers::sqrt3 / 2.0};
  const Complex v2{-0.5, -std::numbers::sqrt3 / 2.0};
  const double triangle = std::min({edge_distance(v0, v1, z), edge_distance(v1, v2, z),
                                    edge_distance(v2, v0, z)});
  // Segment [-1, 1/2] on the real axis, closed at 1/2.
  const double segment = std::min({-std::abs(im), re + 1.0, 0.5 - re});
  RegionVerdict v;
  v.margin = std::max(triangle, segment);
  v.member = v.margin >= -tol;
  if (!v.member) v.violated = "outside [-1,1/2] and conv{1,e^(2pi i/3),e^(4pi i/3)}";
  return v;
}

RegionVerdict stochastic3_real_pair_member(const EigenPair& p, double tol) {
  const double l2 = p.lambda2, l3 = p.lambda3;
  return fold({{"lambda3>=-1", l3 + 1.0},
               {"lambda2>=lambda3", l2 - l3},
               {"lambda2<=1", 1.0 - l2},
               {"trace>=0", 1.0 + l2 + l3}},
              tol);
}

}  // namespace monospec
