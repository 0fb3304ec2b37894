#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monospec/matrix.hpp"

namespace monospec {

/// (n-1) x (n-1) non-negative matrix of consecutive prefix-sum differences of a
/// monotone matrix. It carries exactly the nontrivial spectrum.
class DominanceMatrix {
 public:
  /// Validates non-negativity (entries in [-tol, 0) clamp to 0). Throws NegativeEntry.
  static DominanceMatrix from_matrix(const Matrix& entries, double tol = kDefaultTol);

  std::size_t m() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }

  // Row-major names for the 2x2 case.
  double a() const noexcept { return entries_(0, 0); }
  double b() const noexcept { return entries_(0, 1); }
  double c() const noexcept { return entries_(1, 0); }
  double d() const noexcept { return entries_(1, 1); }

 private:
  explicit DominanceMatrix(Matrix entries) : entries_(std::move(entries)) {}
  friend DominanceMatrix dominance_of(const MonotoneMatrix& m);
  Matrix entries_;
};

struct ConstraintCheck {
  std::string name;
  bool satisfied;
  double slack;  // negative when violated
};

/// Column sums and trace of a general dominance matrix.
struct GeneralPropertiesReport {
  std::vector<ConstraintCheck> checks;  // "colsum<=1 [j]" for each column, then "trace>=0"
  bool all_satisfied() const noexcept;
  double min_slack() const noexcept;
};

struct LiftWitness {
  double m11;
  double m33;
};

/// Outcome of the liftability test: a witness, or the violated bound.
struct LiftCheck {
  std::optional<LiftWitness> witness;
  std::string violated;
  double slack = 0.0;  // minimum slack over the system at the minimal witness
  bool feasible() const noexcept { return witness.has_value(); }
};

/// Throws DimensionError for n < 2.
DominanceMatrix dominance_of(const MonotoneMatrix& m);

/// The eight 2x2 necessary conditions, in the order
/// a+c<=1, b+c<=1, b+d<=1, ac<=1/4, bc<=1/4, bd<=1/4, trace>=0, det>=-1/4.
std::vector<ConstraintCheck> check_lemma1(const DominanceMatrix& d, double tol = kDefaultTol);

GeneralPropertiesReport check_general_properties(const DominanceMatrix& d,
                                                 double tol = kDefaultTol);

/// Slacks of the five-inequality system for a candidate (m11, m33), plus the box [0,1]^2.
std::vector<ConstraintCheck> lift_system(const Matrix& d, const LiftWitness& w,
                                         double tol = kDefaultTol);

/// Decides whether a 2x2 non-negative matrix is the dominance matrix of a 3x3
/// monotone matrix. On success the witness is the minimal one (a+c, b+d).
LiftCheck check_liftable(const Matrix& d, double tol = kDefaultTol);

/// The explicit 3x3 monotone matrix with dominance matrix d. Throws WitnessInvalid.
MonotoneMatrix lift(const Matrix& d, const LiftWitness& w, double tol = kDefaultTol);

}  // namespace monospec
