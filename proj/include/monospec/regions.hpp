#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "monospec/spectra.hpp"

namespace monospec {

/// Membership answer. margin is the minimum constraint slack (negative when violated),
/// not a Euclidean distance. member <=> margin >= -tol.
struct RegionVerdict {
  bool member = false;
  double margin = 0.0;
  std::string violated;  // empty when member
};

/// Lower end of the C5 window on lambda2: (1 + sqrt 5) / 4.
inline constexpr double kC5Threshold = std::numbers::phi / 2.0;
/// Ray slope -lambda3/lambda2 where the C4 and C5 boundary pieces meet: (3 - sqrt 5) / 2.
inline constexpr double kC4C5Slope = 2.0 - std::numbers::phi;

enum class Curve { C1, C2, C3, C4, C5 };
std::string_view curve_name(Curve c) noexcept;

struct BoundaryPoint {
  EigenPair point;
  Curve curve;
};

enum class Region { Xi1, Xi2, Xi3, Xi3Pair, Theta2, Theta3, S3RealPair };
std::string_view region_name(Region r) noexcept;
std::optional<Region> parse_region(std::string_view name) noexcept;

/// Interval membership in the single-eigenvalue monotone regions for n = 1, 2, 3.
/// Throws UnsupportedN otherwise.
RegionVerdict xi_n_member(double lambda, int n, double tol = kDefaultTol);

/// Pair region of 3x3 monotone matrices: C1..C5 constraints, C5 only in its window.
RegionVerdict xi3_pair_member(const EigenPair& p, double tol = kDefaultTol);

/// Boundary point of the pair region on the ray {(s, k s) : s > 0}. Throws DomainError for |k| > 1.
BoundaryPoint xi3_boundary(double k);

/// Stochastic eigenvalue regions for n = 2 (real segment) and n = 3 (segment plus triangle).
RegionVerdict theta_member(Complex z, int n, double tol = kDefaultTol);

/// Real pairs of 3x3 stochastic matrices: -1 <= lambda3 <= lambda2 <= 1, 1 + lambda2 + lambda3 >= 0.
RegionVerdict stochastic3_real_pair_member(const EigenPair& p, double tol = kDefaultTol);

}  // namespace monospec
