#include "monospec/reduction.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace monospec {

namespace {

constexpr double kRowSumLimit = 1e-8;

ReducedBlock reduce_block(const Matrix& a, std::vector<std::size_t> indices, double degenerate_root) {
  ReducedBlock blk;
  blk.indices = std::move(indices);
  const Matrix b = principal_submatrix(a, blk.indices);
  const std::size_t size = b.rows();

  const PerronData pd = perron(b);
  blk.r = pd.r;
  if (pd.zero || !(pd.r > degenerate_root)) {
    blk.degenerate = true;
    blk.lambda.values.assign(size, Complex{});
    return blk;
  }
  blk.lambda = spectrum_of_matrix(b);

  Matrix s(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      s(i, j) = b(i, j) * pd.x[j] / (pd.r * pd.x[i]);
      row += s(i, j);
    }
    const double err = std::abs(row - 1.0);
    if (err > blk.row_sum_error) blk.row_sum_error = err;
    if (!(err <= kRowSumLimit)) {
      std::ostringstream os;
      os.precision(17);
      os << "similarity row " << i + 1 << " of block sums to " << row;
      throw Error(ErrorKind::StochasticityFailure, os.str());
    }
  }
  blk.s = validate_stochastic(s, kRowSumLimit);
  blk.mu = spectrum_of_stochastic(*blk.s);
  return blk;
}

}  // namespace

std::vector<Complex> ReductionResult::nontrivial_spectrum() const {
  std::vector<Complex> all;
  for (const auto& blk : blocks) all.insert(all.end(), blk.lambda.values.begin(), blk.lambda.values.end());
  sort_eigenvalues(all);
  return all;
}

ReductionResult reduce(const MonotoneMatrix& m, double degenerate_root) {
  if (m.n() < 2) throw Error(ErrorKind::Dimension, "reduction needs n >= 2");
  ReductionResult out;
  out.dominance = dominance_of(m).entries();
  const NormalForm nf = frobenius_normal_form(out.dominance, m.tol());

  for (std::size_t k = 0; k < nf.blocks.size(); ++k) {
    ReducedBlock blk = reduce_block(out.dominance, nf.block_indices(k), degenerate_root);
    if (blk.degenerate) {
      out.degenerate.push_back(k);
    } else {
      // Pair each mu with the block eigenvalue closest to mu * r.
      std::vector<bool> used(blk.lambda.size(), false);
      for (const Complex& mu : blk.mu.values) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < blk.lambda.size(); ++j) {
          if (used[j]) continue;
          const double dist = std::abs(blk.lambda.values[j] - mu * blk.r);
          if (dist < best_dist) {
            best_dist = dist;
            best = j;
          }
        }
        used[best] = true;
        out.lambda_map.push_back({k, blk.lambda.values[best], mu});
      }
    }
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

std::vector<RegionVerdict> check_containment(const MonotoneMatrix& m, double tol) {
  if (m.n() != 4) {
    throw Error(ErrorKind::UnsupportedN,
                "containment check needs n = 4, got " + std::to_string(m.n()));
  }
  const Spectrum nontrivial = spectrum_of_dominance(dominance_of(m));
  std::vector<RegionVerdict> out;
  out.reserve(nontrivial.size());
  for (const Complex& z : nontrivial.values) out.push_back(theta_member(z, 3, tol));
  return out;
}

}  // namespace monospec
