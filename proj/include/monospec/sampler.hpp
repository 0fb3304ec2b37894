#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monospec/spectra.hpp"

namespace monospec {

struct SampleConfig {
  std::size_t n = 3;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Counter-based generator: the stream depends only on (seed, index).
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index) noexcept;
  std::uint64_t next() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;

 private:
  std::uint64_t state_;
};

/// Draws one monotone matrix through its prefix-sum table. Row 1 uses n-1 sorted
/// uniforms; each later K[i][l] is uniform on [K[i][l-1], K[i-1][l]]. The law is not
/// uniform on the monotone polytope.
MonotoneMatrix sample_one(std::size_t n, std::uint64_t seed, std::uint64_t index);

/// count samples, sample i drawn from stream (seed, i); identical for any worker count.
std::vector<MonotoneMatrix> sample_monotone(const SampleConfig& cfg);

/// Runs body(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

/// 64-bit FNV-1a over the entry bit patterns.
std::uint64_t matrix_hash(const Matrix& m);

struct ExperimentRecord {
  std::uint64_t index = 0;
  std::uint64_t hash = 0;
  std::string label;  // family name for trace datasets
  double param = 0.0;
  std::vector<Complex> spectrum;  // nontrivial eigenvalues
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, double>> slacks;
};

struct Polyline {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool closed = false;
};

enum class PlotPlane { Pair, Complex };

struct Dataset {
  std::string name;
  bool real_pairs = false;  // spectrum columns as lambda2, lambda3, ... instead of re/im
  bool labelled = false;    // label/param columns present
  PlotPlane plane = PlotPlane::Pair;
  std::vector<ExperimentRecord> records;
  std::vector<Polyline> curves;
};

inline constexpr std::string_view kExperiments[] = {"figure1", "figure2", "figure3", "lemma1",
                                                    "reduction4"};

/// Records for `sample`: spectrum plus the region checks that exist for cfg.n.
Dataset sample_dataset(const SampleConfig& cfg);

/// figure1 | figure2 | figure3 | lemma1 | reduction4. Throws UnknownExperiment.
Dataset run_experiment(std::string_view name, const SampleConfig& cfg);

/// CSV; every number at 17 significant digits.
void write_csv(std::ostream& os, const Dataset& ds);
void write_jsonl(std::ostream& os, const Dataset& ds);

}  // namespace monospec
