#include "monospec/realise.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

namespace monospec {

namespace {

constexpr std::array<Family, 7> kFamilies = {Family::Type1, Family::Type2, Family::C1, Family::C2,
                                             Family::C3,    Family::C4,    Family::C5};

std::string describe(const EigenPair& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.lambda2 << ", " << p.lambda3 << ")";
  return os.str();
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::Type1: return "type1";
    case Family::Type2: return "type2";
    case Family::C1: return "C1";
    case Family::C2: return "C2";
    case Family::C3: return "C3";
    case Family::C4: return "C4";
    case Family::C5: return "C5";
  }
  return "";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : kFamilies) {
    const auto canonical = family_name(f);
    if (canonical.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size() && same; ++i) {
      same = std::tolower(static_cast<unsigned char>(canonical[i])) ==
             std::tolower(static_cast<unsigned char>(name[i]));
    }
    if (same) return f;
  }
  return std::nullopt;
}

std::pair<double, double> alpha_range(Family f) noexcept {
  switch (f) {
    case Family::Type2:
    case Family::C2:
    case Family::C4:
    case Family::C5: return {0.0, 0.5};
    default: return {0.0, 1.0};
  }
}

Family family_of(Curve c) noexcept {
  switch (c) {
    case Curve::C1: return Family::C1;
    case Curve::C2: return Family::C2;
    case Curve::C3: return Family::C3;
    case Curve::C4: return Family::C4;
    case Curve::C5: return Family::C5;
  }
  return Family::C1;
}

MonotoneMatrix family_matrix(const FamilyId& id, double tol) {
  const auto [lo, hi] = alpha_range(id.family);
  const double al = id.alpha;
  if (!(al >= lo && al <= hi)) {
    std::ostringstream os;
    os << family_name(id.family) << " needs alpha in [" << lo << ", " << hi << "], got " << al;
    throw Error(ErrorKind::AlphaOutOfRange, os.str());
  }
  std::vector<std::vector<double>> rows;
  switch (id.family) {
    case Family::Type1:
      rows = {{0, 1 - al, al}, {0, 1 - al, al}, {0, 0, 1}};
      break;
    case Family::Type2:
      rows = {{0.5 - al, 0.5 + al, 0}, {0.5 - al, 0, 0.5 + al}, {0, 0.5 - al, 0.5 + al}};
      break;
    case Family::C1: {
      const double diag = (1 + 2 * al) / 3, off = (1 - al) / 3;
      rows = {{diag, off, off}, {off, diag, off}, {off, off, diag}};
      break;
    }
    case Family::C2:
      rows = {{al, 1 - al, 0}, {al, 1 - 2 * al, al}, {0, 1 - al, al}};
      break;
    case Family::C3:
      rows = {{al, 1 - al, 0}, {0, 1, 0}, {0, 0, 1}};
      break;
    case Family::C4:
      rows = {{1 - al, al, 0}, {0.5, 0, 0.5}, {0, 0.5, 0.5}};
      break;
    case Family::C5:
      rows = {{1 - al, al, 0}, {1 - al, 0, al}, {0, 0, 1}};
      break;
  }
  return validate_monotone(validate_stochastic(rows, tol));
}

FamilyId realising_family(double lambda, double tol) {
  if (!xi_n_member(lambda, 3, tol).member) {
    throw Error(ErrorKind::OutOfRegion,
                "eigenvalue " + std::to_string(lambda) + " is outside [-1/2, 1]");
  }
  if (lambda >= 0.0) return {Family::Type1, std::clamp(1.0 - lambda, 0.0, 1.0)};
  const double l = std::max(lambda, -0.5);
  return {Family::Type2, std::sqrt(std::max(0.25 - l * l, 0.0))};
}

MonotoneMatrix realise_eigenvalue(double lambda, double tol) {
  return family_matrix(realising_family(lambda, tol), tol);
}

MonotoneMatrix equal_rows_matrix(std::span<const double> v, double tol) {
  if (v.empty() || v.size() > kMaxDim) throw Error(ErrorKind::InvalidVector, "bad vector length");
  double sum = 0.0;
  for (double x : v) {
    if (!(x >= -tol)) throw Error(ErrorKind::InvalidVector, "negative component");
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol) throw Error(ErrorKind::InvalidVector, "components do not sum to 1");
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) std::copy(v.begin(), v.end(), m.row(i).begin());
  return validate_monotone(validate_stochastic(m, tol));
}

MonotoneMatrix realise_pair(const EigenPair& p, double tol) {
  const auto verdict = xi3_pair_member(p, tol);
  if (!verdict.member) {
    throw Error(ErrorKind::OutOfRegion,
                "pair " + describe(p) + " violates " + verdict.violated);
  }
  const double l2 = p.lambda2, l3 = p.lambda3;
  static constexpr std::array<double, 3> kCentre = {0.0, 1.0, 0.0};

  if (l2 <= 0.0 && l3 <= 0.0) return equal_rows_matrix(kCentre, tol);

  if (l3 >= 0.0) {
    Matrix diag(2, 2);
    diag(0, 0) = std::min(l2, 1.0);
    diag(1, 1) = l3;
    const auto check = check_liftable(diag, tol);
    if (!check.feasible()) {
      throw Error(ErrorKind::OutOfRegion, "diagonal lift infeasible: " + check.violated);
    }
    return lift(diag, *check.witness, tol);
  }

  const double k = std::max(l3 / l2, -1.0);
  const BoundaryPoint b = xi3_boundary(k);
  const Family fam = family_of(b.curve);
  const double alpha = family_parameter_inverse(b.curve, b.point, 1e-9);
  const MonotoneMatrix boundary = family_matrix({fam, alpha}, tol);

  const EigenPair realised = eigenpair_3x3(dominance_of(boundary));
  const double mismatch = std::max(std::abs(realised.lambda2 - b.point.lambda2),
                                   std::abs(realised.lambda3 - b.point.lambda3));
  if (mismatch > 1e-9) {
    throw Error(ErrorKind::InternalBoundaryMismatch,
                std::string(family_name(fam)) + " realises " + describe(realised) +
                    " but the boundary point is " + describe(b.point));
  }
  const double t = std::clamp(l2 / b.point.lambda2, 0.0, 1.0);
  return convex_combine(boundary, equal_rows_matrix(kCentre, tol), t);
}

double family_parameter_inverse(Curve curve, const EigenPair& p, double tol) {
  const double l2 = p.lambda2, l3 = p.lambda3;
  double residual = 0.0;
  double alpha = 0.0;
  switch (curve) {
    case Curve::C2:
      residual = l2 + l3;
      alpha = l2;
      break;
    case Curve::C4:
      residual = l2 * l3 + 0.25;
      alpha = 0.5 - (l2 + l3);
      break;
    case Curve::C5:
      residual = l2 * l2 + l2 * l3 + l3 * l3 - l2 - l3;
      alpha = 1.0 - (l2 + l3);
      break;
    default:
      throw Error(ErrorKind::NotOnCurve,
                  "parameter inverse defined for C2, C4, C5 only, got " +
                      std::string(curve_name(curve)));
  }
  const auto [lo, hi] = alpha_range(family_of(curve));
  if (std::abs(residual) > tol || !(alpha >= lo - tol && alpha <= hi + tol)) {
    throw Error(ErrorKind::NotOnCurve, describe(p) + " is not on " + std::string(curve_name(curve)));
  }
  return std::clamp(alpha, lo, hi);
}

}  // namespace monospec
