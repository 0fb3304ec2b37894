#include "monospec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monospec {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorKind::Dimension, "ragged rows: row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(c));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorKind::Dimension, "product shape mismatch");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double trace(const Matrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

double max_abs_diff(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw Error(ErrorKind::Dimension, "shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < lhs.data().size(); ++k) {
    worst = std::max(worst, std::abs(lhs.data()[k] - rhs.data()[k]));
  }
  return worst;
}

Matrix principal_submatrix(const Matrix& m, std::span<const std::size_t> indices) {
  Matrix out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = m(indices[i], indices[j]);
  }
  return out;
}

StochasticMatrix validate_stochastic(const Matrix& entries, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "tolerance must be positive");
  if (!entries.is_square()) {
    throw Error(ErrorKind::Dimension, "matrix is " + std::to_string(entries.rows()) + "x" +
                                          std::to_string(entries.cols()) + ", not square");
  }
  const std::size_t n = entries.rows();
  if (n < 1 || n > kMaxDim) {
    throw Error(ErrorKind::Dimension, "dimension " + std::to_string(n) + " outside [1, " +
                                          std::to_string(kMaxDim) + "]");
  }
  Matrix m = entries;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double& v = m(i, j);
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::NegativeEntry, "non-finite entry at (" + std::to_string(i + 1) +
                                                  "," + std::to_string(j + 1) + ")");
      }
      if (v < -tol) {
        std::ostringstream os;
        os.precision(17);
        os << "entry (" << i + 1 << "," << j + 1 << ") = " << v;
        throw Error(ErrorKind::NegativeEntry, os.str());
      }
      v = std::clamp(v, 0.0, 1.0);
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) {
      std::ostringstream os;
      os.precision(17);
      os << "row " << i + 1 << " sums to " << sum;
      throw Error(ErrorKind::RowSum, os.str());
    }
    if (sum != 1.0) {
      for (double& v : m.row(i)) v /= sum;
    }
  }
  return StochasticMatrix(std::move(m), tol);
}

StochasticMatrix validate_stochastic(const std::vector<std::vector<double>>& rows, double tol) {
  return validate_stochastic(Matrix::from_rows(rows), tol);
}

std::optional<DominanceViolation> first_dominance_violation(const StochasticMatrix& s) {
  const std::size_t n = s.n();
  const double tol = s.tol();
  // Suffix sums, the defining form of the dominance inequality.
  std::vector<double> upper(n), lower(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double su = 0.0, sl = 0.0;
    for (std::size_t j = n; j-- > 0;) {
      su += s(k, j);
      sl += s(k + 1, j);
      upper[j] = su;
      lower[j] = sl;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (lower[r] < upper[r] - tol) return DominanceViolation{k + 1, r + 1, upper[r] - lower[r]};
    }
  }
  return std::nullopt;
}

MonotoneMatrix validate_monotone(const StochasticMatrix& s) {
  if (auto v = first_dominance_violation(s)) throw MonotoneViolation(v->k, v->r, v->deficit);
  return MonotoneMatrix(s);
}

PrefixSumTable prefix_sums(const StochasticMatrix& s) {
  const std::size_t n = s.n();
  PrefixSumTable out{n, Matrix(n, n - 1)};
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t l = 0; l + 1 < n; ++l) {
      acc += s(i, l);
      out.table(i, l) = acc;
    }
  }
  return out;
}

bool is_column_non_increasing(const PrefixSumTable& k, double tol) {
  for (std::size_t i = 0; i + 1 < k.table.rows(); ++i) {
    for (std::size_t l = 0; l < k.table.cols(); ++l) {
      if (k.table(i + 1, l) > k.table(i, l) + tol) return false;
    }
  }
  return true;
}

StochasticMatrix convex_combine(const StochasticMatrix& a, const StochasticMatrix& b, double t) {
  if (a.n() != b.n()) throw Error(ErrorKind::Dimension, "convex_combine of different sizes");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::Domain, "weight outside [0,1]");
  const std::size_t n = a.n();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = t * a(i, j) + (1.0 - t) * b(i, j);
  }
  return validate_stochastic(m, std::max(a.tol(), b.tol()));
}

MonotoneMatrix convex_combine(const MonotoneMatrix& a, const MonotoneMatrix& b, double t) {
  return validate_monotone(convex_combine(a.base(), b.base(), t));
}

}  // namespace monospec
