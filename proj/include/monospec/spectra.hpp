#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "monospec/dominance.hpp"
#include "monospec/matrix.hpp"

namespace monospec {

using Complex = std::complex<double>;

/// Eigenvalue multiset, sorted by real part then imaginary part, both descending.
struct Spectrum {
  std::vector<Complex> values;
  bool trivial_included = false;

  std::size_t size() const noexcept { return values.size(); }
  /// Copy without one instance of the eigenvalue closest to 1.
  Spectrum without_trivial() const;
  double max_abs_imag() const noexcept;
};

/// Nontrivial eigenvalues of a 3x3 stochastic matrix, lambda2 >= lambda3.
struct EigenPair {
  double lambda2;
  double lambda3;
};

struct PerronData {
  double r = 0.0;
  std::vector<double> x;   // sum-one normalized
  bool zero = false;       // 1x1 zero block: r = 0, x = (1)
  double residual = 0.0;   // ||Ax - rx||_inf
};

/// Permutation to block upper triangular form with irreducible diagonal blocks.
struct NormalForm {
  std::vector<std::size_t> perm;                            // perm[k] = original index at position k
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) into perm

  std::vector<std::size_t> block_indices(std::size_t k) const;
};

namespace poly {

/// Monic characteristic polynomial det(xI - A), coefficients in ascending order.
std::vector<double> characteristic(const Matrix& a);
/// Synthetic division by (x - root); the remainder is dropped.
std::vector<double> deflate(std::span<const double> coeffs, double root);
Complex evaluate(std::span<const double> coeffs, Complex x) noexcept;
/// All roots of a monic real polynomial: Durand-Kerner, Newton polish, multiplicity
/// snapping, conjugate pairing; sorted like a Spectrum. Throws ConvergenceError.
std::vector<Complex> roots(std::span<const double> coeffs);

}  // namespace poly

/// Sorts real part descending, then imaginary part descending.
void sort_eigenvalues(std::vector<Complex>& values);

/// Largest distance between matched elements under greedy nearest matching;
/// infinity when the sizes differ.
double spectrum_distance(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// Closed-form roots of the 2x2 dominance matrix. Throws DimensionError unless m = 2.
EigenPair eigenpair_3x3(const DominanceMatrix& d);

/// Full spectrum for n <= 12; the exactly known root 1 is deflated before root finding.
Spectrum spectrum_of_stochastic(const StochasticMatrix& s);
/// Spectrum of a dominance matrix (m <= 11), trivial_included = false.
Spectrum spectrum_of_dominance(const DominanceMatrix& d);
/// Spectrum of an arbitrary small square matrix through the same pipeline.
Spectrum spectrum_of_matrix(const Matrix& a);

/// Determinant by LU with partial pivoting.
double determinant(const Matrix& a);

/// Perron root and sum-one eigenvector of an irreducible non-negative matrix.
/// Throws PerronFailure when the residual target is missed.
PerronData perron(const Matrix& a);

/// Strongly connected components of {(i,j) : a_ij > tol}, ordered so the permuted
/// matrix is block upper triangular. Incomparable components go by smallest index.
NormalForm frobenius_normal_form(const Matrix& a, double tol = kDefaultTol);

}  // namespace monospec
