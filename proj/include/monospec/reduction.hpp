#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monospec/regions.hpp"
#include "monospec/spectra.hpp"

namespace monospec {

/// One irreducible diagonal block of the dominance matrix in normal form.
struct ReducedBlock {
  std::vector<std::size_t> indices;  // original dominance-matrix indices
  double r = 0.0;                    // Perron root of the block
  bool degenerate = false;           // r <= threshold: contributes zeros directly
  std::optional<StochasticMatrix> s; // (1/r) X^{-1} B X, X = diag(Perron vector)
  double row_sum_error = 0.0;        // max |row sum - 1| of s before validation
  Spectrum lambda;                   // block spectrum
  Spectrum mu;                       // spectrum of s
};

struct LambdaMu {
  std::size_t block;
  Complex lambda;
  Complex mu;  // lambda / r
};

struct ReductionResult {
  std::vector<ReducedBlock> blocks;
  std::vector<LambdaMu> lambda_map;
  std::vector<std::size_t> degenerate;  // indices into blocks
  Matrix dominance;

  /// Union of the block spectra, zeros included for degenerate blocks.
  std::vector<Complex> nontrivial_spectrum() const;
};

inline constexpr double kDegenerateRoot = 1e-12;

/// Splits D(M) into irreducible blocks and turns each block with a positive Perron
/// root into a stochastic matrix of the same size by diagonal similarity.
/// Throws DimensionError (n < 2), PerronFailure or StochasticityFailure.
ReductionResult reduce(const MonotoneMatrix& m, double degenerate_root = kDegenerateRoot);

/// Stochastic-region verdict (theta3) for every nontrivial eigenvalue of a 4x4 monotone
/// matrix. Throws UnsupportedN for other sizes.
std::vector<RegionVerdict> check_containment(const MonotoneMatrix& m, double tol = 1e-8);

}  // namespace monospec
