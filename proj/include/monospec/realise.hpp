#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "monospec/dominance.hpp"
#include "monospec/regions.hpp"

namespace monospec {

/// Explicit 3x3 realising families. Type1 and Type2 cover the single-eigenvalue
/// region; C1..C5 trace the boundary curves of the pair region.
enum class Family { Type1, Type2, C1, C2, C3, C4, C5 };

struct FamilyId {
  Family family;
  double alpha;
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;
/// Closed parameter range [lo, hi] of each family.
std::pair<double, double> alpha_range(Family f) noexcept;
Family family_of(Curve c) noexcept;

/// Throws AlphaOutOfRange.
MonotoneMatrix family_matrix(const FamilyId& id, double tol = kDefaultTol);

/// Type1 with alpha = 1 - lambda for lambda >= 0, otherwise Type2 with
/// alpha = sqrt(1/4 - lambda^2).
FamilyId realising_family(double lambda, double tol = kDefaultTol);
/// Throws OutOfRegion when lambda is outside [-1/2, 1].
MonotoneMatrix realise_eigenvalue(double lambda, double tol = kDefaultTol);

/// All rows equal to v; its dominance matrix is zero. Throws InvalidVector.
MonotoneMatrix equal_rows_matrix(std::span<const double> v, double tol = kDefaultTol);

/// A 3x3 monotone matrix with spectrum {1, lambda2, lambda3}. Pairs with lambda3 >= 0
/// lift diag(lambda2, lambda3); pairs with lambda3 < 0 scale a boundary family matrix
/// toward the equal-rows matrix with rows (0, 1, 0).
/// Throws OutOfRegion or InternalBoundaryMismatch.
MonotoneMatrix realise_pair(const EigenPair& p, double tol = kDefaultTol);

/// Family parameter for a point on C2, C4 or C5. Throws NotOnCurve.
double family_parameter_inverse(Curve curve, const EigenPair& p, double tol = 1e-9);

}  // namespace monospec
