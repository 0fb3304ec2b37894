#include "monospec/dominance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "monospec/kernels.hpp"

namespace monospec {

namespace {

void require_2x2(const Matrix& d, const char* what) {
  if (d.rows() != 2 || d.cols() != 2) {
    throw Error(ErrorKind::Dimension, std::string(what) + " needs a 2x2 matrix");
  }
}

void require_non_negative(const Matrix& d, double tol) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (!(d(i, j) >= -tol)) {
        std::ostringstream os;
        os.precision(17);
        os << "entry (" << i + 1 << "," << j + 1 << ") = " << d(i, j);
        throw Error(ErrorKind::NegativeEntry, os.str());
      }
    }
  }
}

}  // namespace

DominanceMatrix DominanceMatrix::from_matrix(const Matrix& entries, double tol) {
  if (!entries.is_square()) throw Error(ErrorKind::Dimension, "dominance matrix must be square");
  require_non_negative(entries, tol);
  Matrix m = entries;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (double& v : m.row(i)) v = std::max(v, 0.0);
  }
  return DominanceMatrix(std::move(m));
}

bool GeneralPropertiesReport::all_satisfied() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.satisfied; });
}

double GeneralPropertiesReport::min_slack() const noexcept {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& c : checks) s = std::min(s, c.slack);
  return s;
}

DominanceMatrix dominance_of(const MonotoneMatrix& m) {
  const std::size_t n = m.n();
  if (n < 2) throw Error(ErrorKind::Dimension, "dominance matrix needs n >= 2");
  // (D)_{kl} = sum_{j<=l} m_{kj} - sum_{j<=l} m_{k+1,j}
  Matrix d(n - 1, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double upper = 0.0, lower = 0.0;
    for (std::size_t l = 0; l + 1 < n; ++l) {
      upper += m(k, l);
      lower += m(k + 1, l);
      d(k, l) = std::max(upper - lower, 0.0);
    }
  }
  return DominanceMatrix(std::move(d));
}

std::vector<ConstraintCheck> check_lemma1(const DominanceMatrix& d, double tol) {
  require_2x2(d.entries(), "check_lemma1");
  static constexpr std::array<const char*, kernels::kLemma1Constraints> kNames = {
      "a+c<=1", "b+c<=1", "b+d<=1", "ac<=1/4", "bc<=1/4", "bd<=1/4", "trace>=0", "det>=-1/4"};
  const double a = d.a(), b = d.b(), c = d.c(), dd = d.d();
  std::array<double, kernels::kLemma1Constraints> slack{};
  kernels::detail::lemma1_slacks_scalar(&a, &b, &c, &dd, 1, slack.data());
  std::vector<ConstraintCheck> out;
  out.reserve(slack.size());
  for (std::size_t k = 0; k < slack.size(); ++k) {
    out.push_back({kNames[k], slack[k] >= -tol, slack[k]});
  }
  return out;
}

GeneralPropertiesReport check_general_properties(const DominanceMatrix& d, double tol) {
  GeneralPropertiesReport report;
  const std::size_t m = d.m();
  for (std::size_t j = 0; j < m; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m; ++i) col += d(i, j);
    const double slack = 1.0 - col;
    report.checks.push_back({"colsum<=1 [" + std::to_string(j + 1) + "]", slack >= -tol, slack});
  }
  const double tr = trace(d.entries());
  report.checks.push_back({"trace>=0", tr >= -tol, tr});
  return report;
}

std::vector<ConstraintCheck> lift_system(const Matrix& d, const LiftWitness& w, double tol) {
  require_2x2(d, "lift_system");
  const double a = d(0, 0), b = d(0, 1), c = d(1, 0), dd = d(1, 1);
  const double sum = w.m11 + w.m33;
  const std::array<std::pair<const char*, double>, 9> slacks = {{
      {"m11>=0", w.m11},
      {"m11<=1", 1.0 - w.m11},
      {"m33>=0", w.m33},
      {"m33<=1", 1.0 - w.m33},
      {"a+c<=m11", w.m11 - (a + c)},
      {"b+d<=m33", w.m33 - (b + dd)},
      {"m11+m33<=1+b+d", 1.0 + b + dd - sum},
      {"m11+m33<=1+a+d", 1.0 + a + dd - sum},
      {"m11+m33<=1+a+c", 1.0 + a + c - sum},
  }};
  std::vector<ConstraintCheck> out;
  out.reserve(slacks.size());
  for (const auto& [name, s] : slacks) out.push_back({name, s >= -tol, s});
  return out;
}

LiftCheck check_liftable(const Matrix& d, double tol) {
  require_2x2(d, "check_liftable");
  require_non_negative(d, tol);
  const LiftWitness minimal{d(0, 0) + d(1, 0), d(0, 1) + d(1, 1)};
  LiftCheck result;
  result.slack = std::numeric_limits<double>::infinity();
  for (const auto& c : lift_system(d, minimal, tol)) {
    if (c.slack < result.slack) result.slack = c.slack;
    if (!c.satisfied && result.violated.empty()) result.violated = c.name;
  }
  if (result.violated.empty()) result.witness = minimal;
  return result;
}

MonotoneMatrix lift(const Matrix& d, const LiftWitness& w, double tol) {
  require_2x2(d, "lift");
  require_non_negative(d, tol);
  for (const auto& c : lift_system(d, w, tol)) {
    if (!c.satisfied) {
      std::ostringstream os;
      os.precision(17);
      os << "witness (" << w.m11 << ", " << w.m33 << ") violates " << c.name << " by "
         << -c.slack;
      throw Error(ErrorKind::WitnessInvalid, os.str());
    }
  }
  const double a = d(0, 0), b = d(0, 1), c = d(1, 0), dd = d(1, 1);
  const double m11 = w.m11, m33 = w.m33;
  Matrix m(3, 3);
  m(0, 0) = m11;
  m(0, 1) = 1.0 - (m11 + m33 - b - dd);
  m(0, 2) = m33 - b - dd;
  m(1, 0) = m11 - a;
  m(1, 1) = 1.0 - (m11 - a + m33 - dd);
  m(1, 2) = m33 - dd;
  m(2, 0) = m11 - a - c;
  m(2, 1) = 1.0 - (m11 - a - c + m33);
  m(2, 2) = m33;
  // Corner witnesses land exactly on zero; clear rounding residue.
  for (std::size_t i = 0; i < 3; ++i) {
    for (double& v : m.row(i)) {
      if (v < 0.0 && v >= -tol) v = 0.0;
    }
  }
  return validate_monotone(validate_stochastic(m, tol));
}

}  // namespace monospec
