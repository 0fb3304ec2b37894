#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monospec/error.hpp"

namespace monospec {

inline constexpr double kDefaultTol = 1e-12;

/// Largest supported dimension. Everything here is desk scale.
inline constexpr std::size_t kMaxDim = 32;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  /// Throws DimensionError when rows are ragged.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& lhs, const Matrix& rhs);
double trace(const Matrix& m);
/// Largest absolute entrywise difference; matrices must have equal shape.
double max_abs_diff(const Matrix& lhs, const Matrix& rhs);
/// Principal submatrix on the given index set.
Matrix principal_submatrix(const Matrix& m, std::span<const std::size_t> indices);

/// n x n row-stochastic matrix, validated on construction.
class StochasticMatrix {
 public:
  std::size_t n() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  double tol() const noexcept { return tol_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }

 private:
  StochasticMatrix(Matrix entries, double tol) : entries_(std::move(entries)), tol_(tol) {}
  friend StochasticMatrix validate_stochastic(const Matrix& entries, double tol);

  Matrix entries_;
  double tol_;
};

/// Stochastic matrix whose row k+1 stochastically dominates row k for every k.
class MonotoneMatrix {
 public:
  const StochasticMatrix& base() const noexcept { return base_; }
  operator const StochasticMatrix&() const noexcept { return base_; }

  std::size_t n() const noexcept { return base_.n(); }
  const Matrix& entries() const noexcept { return base_.entries(); }
  double tol() const noexcept { return base_.tol(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return base_(i, j); }

 private:
  explicit MonotoneMatrix(StochasticMatrix base) : base_(std::move(base)) {}
  friend MonotoneMatrix validate_monotone(const StochasticMatrix& s);

  StochasticMatrix base_;
};

/// K[i][l] = sum of entries 0..l of row i, for l < n-1. The last column is always 1 and omitted.
struct PrefixSumTable {
  std::size_t n = 0;
  Matrix table;  // n x (n-1)
};

/// First place where dominance fails: rows k and k+1 (1-based k), suffix start column r (1-based).
struct DominanceViolation {
  std::size_t k;
  std::size_t r;
  double deficit;
};

/// Clamps entries within tol of [0,1], renormalizes rows within tol of unit sum.
/// Throws DimensionError, NegativeEntry or RowSumError.
StochasticMatrix validate_stochastic(const Matrix& entries, double tol = kDefaultTol);
StochasticMatrix validate_stochastic(const std::vector<std::vector<double>>& rows,
                                     double tol = kDefaultTol);

/// Checks the suffix-sum dominance inequalities directly. Throws MonotoneViolation.
MonotoneMatrix validate_monotone(const StochasticMatrix& s);
std::optional<DominanceViolation> first_dominance_violation(const StochasticMatrix& s);

PrefixSumTable prefix_sums(const StochasticMatrix& s);
bool is_column_non_increasing(const PrefixSumTable& k, double tol);

/// Entrywise t*a + (1-t)*b, revalidated.
StochasticMatrix convex_combine(const StochasticMatrix& a, const StochasticMatrix& b, double t);
MonotoneMatrix convex_combine(const MonotoneMatrix& a, const MonotoneMatrix& b, double t);

}  // namespace monospec
