#include "monospec/sampler.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "monospec/dominance.hpp"
#include "monospec/kernels.hpp"
#include "monospec/realise.hpp"
#include "monospec/reduction.hpp"
#include "monospec/regions.hpp"

namespace monospec {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_hash(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

constexpr std::array<const char*, kernels::kLemma1Constraints> kLemma1Names = {
    "a+c<=1", "b+c<=1", "b+d<=1", "ac<=1/4", "bc<=1/4", "bd<=1/4", "trace>=0", "det>=-1/4"};

/// 3x3 records from the batched closed-form kernels.
std::vector<ExperimentRecord> pair_records(const SampleConfig& cfg, bool lemma1_detail) {
  const std::size_t count = cfg.count;
  std::vector<double> a(count), b(count), c(count), d(count);
  std::vector<ExperimentRecord> records(count);
  parallel_for(count, cfg.workers, [&](std::size_t i) {
    const MonotoneMatrix m = sample_one(3, cfg.seed, i);
    const DominanceMatrix dm = dominance_of(m);
    a[i] = dm.a();
    b[i] = dm.b();
    c[i] = dm.c();
    d[i] = dm.d();
    records[i].index = i;
    records[i].hash = matrix_hash(m.entries());
  });

  const kernels::DominanceBatch batch{a, b, c, d};
  std::vector<double> l2(count), l3(count), slack(kernels::kLemma1Constraints * count);
  kernels::eigenpairs(batch, l2, l3);
  kernels::lemma1_slacks(batch, slack);

  for (std::size_t i = 0; i < count; ++i) {
    auto& rec = records[i];
    const EigenPair p{l2[i], l3[i]};
    rec.spectrum = {Complex(p.lambda2, 0.0), Complex(p.lambda3, 0.0)};
    const auto xi = xi3_pair_member(p, 1e-9);
    const auto s3 = stochastic3_real_pair_member(p, 1e-9);
    double lemma_min = slack[i];
    for (std::size_t k = 1; k < kernels::kLemma1Constraints; ++k) {
      lemma_min = std::min(lemma_min, slack[k * count + i]);
    }
    if (lemma1_detail) {
      rec.verdicts = {{"lemma1", lemma_min >= -1e-12}};
      for (std::size_t k = 0; k < kernels::kLemma1Constraints; ++k) {
        rec.slacks.emplace_back(kLemma1Names[k], slack[k * count + i]);
      }
    } else {
      rec.verdicts = {{"xi3pair", xi.member}, {"s3realpair", s3.member}};
      rec.slacks = {{"xi3pair_margin", xi.margin},
                    {"s3realpair_margin", s3.margin},
                    {"lemma1_min_slack", lemma_min}};
    }
  }
  return records;
}

std::vector<ExperimentRecord> general_records(const SampleConfig& cfg) {
  std::vector<ExperimentRecord> records(cfg.count);
  parallel_for(cfg.count, cfg.workers, [&](std::size_t i) {
    const MonotoneMatrix m = sample_one(cfg.n, cfg.seed, i);
    auto& rec = records[i];
    rec.index = i;
    rec.hash = matrix_hash(m.entries());
    if (cfg.n == 1) {
      rec.verdicts = {{"xi1", true}};
      return;
    }
    const DominanceMatrix dm = dominance_of(m);
    if (cfg.n <= 12) rec.spectrum = spectrum_of_dominance(dm).values;
    if (cfg.n == 2) {
      const auto v = xi_n_member(rec.spectrum.front().real(), 2, 1e-9);
      rec.verdicts = {{"xi2", v.member}};
      rec.slacks = {{"xi2_margin", v.margin}};
      return;
    }
    const auto general = check_general_properties(dm, 1e-12);
    rec.verdicts = {{"general", general.all_satisfied()}};
    rec.slacks = {{"general_min_slack", general.min_slack()}};
    if (cfg.n == 4) {
      double worst = std::numeric_limits<double>::infinity();
      for (const Complex& z : rec.spectrum) worst = std::min(worst, theta_member(z, 3, 1e-8).margin);
      rec.verdicts.emplace_back("theta3", worst >= -1e-8);
      rec.slacks.emplace_back("theta3_min_margin", worst);
    }
  });
  return records;
}

Polyline sampled_curve(std::string name, std::size_t points,
                       const std::function<std::pair<double, double>(double)>& f) {
  Polyline pl{std::move(name), {}, false};
  for (std::size_t k = 0; k < points; ++k) {
    pl.points.push_back(f(static_cast<double>(k) / static_cast<double>(points - 1)));
  }
  return pl;
}

std::vector<Polyline> pair_region_curves() {
  std::vector<Polyline> curves;
  curves.push_back(sampled_curve("C1", 2, [](double t) { return std::pair{t, t}; }));
  curves.push_back(sampled_curve("C2", 2, [](double t) { return std::pair{0.5 * t, -0.5 * t}; }));
  curves.push_back(sampled_curve("C3", 2, [](double t) { return std::pair{1.0, t}; }));
  curves.push_back(sampled_curve("C4", 64, [](double t) {
    const double l2 = 0.5 + t * (kC5Threshold - 0.5);
    return std::pair{l2, -0.25 / l2};
  }));
  curves.push_back(sampled_curve("C5", 64, [](double t) {
    const double l2 = kC5Threshold + t * (1.0 - kC5Threshold);
    const double disc = (l2 - 1.0) * (l2 - 1.0) - 4.0 * (l2 * l2 - l2);
    return std::pair{l2, 0.5 * ((1.0 - l2) - std::sqrt(std::max(disc, 0.0)))};
  }));
  return curves;
}

Dataset figure1() {
  Dataset ds;
  ds.name = "figure1";
  ds.real_pairs = true;
  ds.labelled = true;
  ds.plane = PlotPlane::Complex;
  std::uint64_t index = 0;
  auto trace = [&](Family fam, std::size_t steps) {
    for (std::size_t k = 0; k <= steps; ++k) {
      const double alpha = static_cast<double>(k) * 1e-3;
      const MonotoneMatrix m = family_matrix({fam, alpha});
      ExperimentRecord rec;
      rec.index = index++;
      rec.hash = matrix_hash(m.entries());
      rec.label = family_name(fam);
      rec.param = alpha;
      rec.spectrum = spectrum_of_stochastic(m).without_trivial().values;
      double worst = std::numeric_limits<double>::infinity();
      for (const Complex& z : rec.spectrum) {
        worst = std::min({worst, xi_n_member(z.real(), 3, 1e-9).margin, -std::abs(z.imag())});
      }
      rec.verdicts = {{"xi3", worst >= -1e-9}};
      rec.slacks = {{"xi3_margin", worst}};
      ds.records.push_back(std::move(rec));
    }
  };
  trace(Family::Type1, 1000);
  trace(Family::Type2, 500);
  const double h = std::sqrt(3.0) / 2.0;
  ds.curves.push_back({"theta3 triangle", {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}}, true});
  ds.curves.push_back({"theta3 segment", {{-1.0, 0.0}, {0.5, 0.0}}, false});
  ds.curves.push_back({"xi3", {{-0.5, 0.0}, {1.0, 0.0}}, false});
  return ds;
}

Dataset reduction4(const SampleConfig& cfg) {
  Dataset ds;
  ds.name = "reduction4";
  ds.plane = PlotPlane::Complex;
  ds.records.resize(cfg.count);
  parallel_for(cfg.count, cfg.workers, [&](std::size_t i) {
    const MonotoneMatrix m = sample_one(4, cfg.seed, i);
    auto& rec = ds.records[i];
    rec.index = i;
    rec.hash = matrix_hash(m.entries());
    const auto verdicts = check_containment(m, 1e-8);
    const ReductionResult red = reduce(m);
    rec.spectrum = red.nontrivial_spectrum();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& v : verdicts) worst = std::min(worst, v.margin);
    double row_err = 0.0;
    double gain = std::numeric_limits<double>::infinity();
    for (const auto& blk : red.blocks) row_err = std::max(row_err, blk.row_sum_error);
    for (const auto& lm : red.lambda_map) gain = std::min(gain, std::abs(lm.mu) - std::abs(lm.lambda));
    rec.verdicts = {{"theta3", worst >= -1e-8}};
    rec.slacks = {{"theta3_min_margin", worst},
                  {"max_row_sum_error", row_err},
                  {"min_modulus_gain", std::isfinite(gain) ? gain : 0.0}};
  });
  return ds;
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) noexcept
    : state_(mix64(seed + kGolden) ^ mix64(index * kGolden + 0x632be59bd9b4e019ULL)) {}

std::uint64_t SampleRng::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

double SampleRng::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

MonotoneMatrix sample_one(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1 || n > kMaxDim) throw Error(ErrorKind::Dimension, "sample dimension out of range");
  SampleRng rng(seed, index);
  Matrix k(n, n - 1);
  if (n > 1) {
    std::vector<double> first(n - 1);
    for (double& u : first) u = rng.uniform();
    std::sort(first.begin(), first.end());
    std::copy(first.begin(), first.end(), k.row(0).begin());
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t l = 0; l + 1 < n; ++l) {
      const double lo = l == 0 ? 0.0 : k(i, l - 1);
      const double hi = k(i - 1, l);
      k(i, l) = lo + rng.uniform() * (hi - lo);
    }
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double prev = 0.0;
    for (std::size_t l = 0; l + 1 < n; ++l) {
      m(i, l) = k(i, l) - prev;
      prev = k(i, l);
    }
    m(i, n - 1) = 1.0 - prev;
  }
  return validate_monotone(validate_stochastic(m, kDefaultTol));
}

std::vector<MonotoneMatrix> sample_monotone(const SampleConfig& cfg) {
  std::vector<std::optional<MonotoneMatrix>> slots(cfg.count);
  parallel_for(cfg.count, cfg.workers,
               [&](std::size_t i) { slots[i] = sample_one(cfg.n, cfg.seed, i); });
  std::vector<MonotoneMatrix> out;
  out.reserve(cfg.count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::mutex failure_mutex;
  auto worker = [&] {
    constexpr std::size_t kChunk = 64;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) break;
      const std::size_t end = std::min(count, begin + kChunk);
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t matrix_hash(const Matrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  feed(m.rows());
  feed(m.cols());
  for (double v : m.data()) feed(std::bit_cast<std::uint64_t>(v));
  return h;
}

Dataset sample_dataset(const SampleConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxDim) throw Error(ErrorKind::Dimension, "sample dimension out of range");
  Dataset ds;
  ds.name = "sample";
  if (cfg.n == 3) {
    ds.real_pairs = true;
    ds.records = pair_records(cfg, false);
  } else {
    ds.real_pairs = cfg.n == 2;
    ds.plane = PlotPlane::Complex;
    ds.records = general_records(cfg);
  }
  return ds;
}

Dataset run_experiment(std::string_view name, const SampleConfig& cfg) {
  if (name == "figure1") return figure1();
  if (name == "figure2" || name == "figure3") {
    SampleConfig c = cfg;
    c.n = 3;
    Dataset ds;
    ds.name = std::string(name);
    ds.real_pairs = true;
    ds.records = pair_records(c, false);
    ds.curves = pair_region_curves();
    if (name == "figure3") {
      ds.curves.push_back({"s3realpair", {{1.0, 1.0}, {1.0, -1.0}, {0.0, -1.0}, {-0.5, -0.5}}, true});
    }
    return ds;
  }
  if (name == "lemma1") {
    SampleConfig c = cfg;
    c.n = 3;
    Dataset ds;
    ds.name = "lemma1";
    ds.real_pairs = true;
    ds.records = pair_records(c, true);
    return ds;
  }
  if (name == "reduction4") return reduction4(cfg);
  throw Error(ErrorKind::UnknownExperiment, "unknown experiment '" + std::string(name) + "'");
}

void write_csv(std::ostream& os, const Dataset& ds) {
  std::size_t width = 0;
  for (const auto& r : ds.records) width = std::max(width, r.spectrum.size());
  os << "index,hash";
  if (ds.labelled) os << ",label,param";
  for (std::size_t k = 0; k < width; ++k) {
    if (ds.real_pairs) {
      os << ",lambda" << k + 2;
    } else {
      os << ",re" << k + 2 << ",im" << k + 2;
    }
  }
  if (!ds.records.empty()) {
    for (const auto& [name, _] : ds.records.front().verdicts) os << ',' << name;
    for (const auto& [name, _] : ds.records.front().slacks) os << ',' << name;
  }
  os << '\n';
  for (const auto& r : ds.records) {
    os << r.index << ',' << format_hash(r.hash);
    if (ds.labelled) os << ',' << r.label << ',' << format_number(r.param);
    for (std::size_t k = 0; k < width; ++k) {
      const Complex z = k < r.spectrum.size() ? r.spectrum[k] : Complex{};
      os << ',' << format_number(z.real());
      if (!ds.real_pairs) os << ',' << format_number(z.imag());
    }
    for (const auto& [_, v] : r.verdicts) os << ',' << (v ? 1 : 0);
    for (const auto& [_, v] : r.slacks) os << ',' << format_number(v);
    os << '\n';
  }
}

void write_jsonl(std::ostream& os, const Dataset& ds) {
  for (const auto& r : ds.records) {
    os << "{\"index\":" << r.index << ",\"hash\":\"" << format_hash(r.hash) << '"';
    if (ds.labelled) os << ",\"label\":\"" << r.label << "\",\"param\":" << format_number(r.param);
    os << ",\"spectrum\":[";
    for (std::size_t k = 0; k < r.spectrum.size(); ++k) {
      os << (k ? "," : "") << "{\"re\":" << format_number(r.spectrum[k].real())
         << ",\"im\":" << format_number(r.spectrum[k].imag()) << '}';
    }
    os << "],\"verdicts\":{";
    for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
      os << (k ? "," : "") << '"' << r.verdicts[k].first << "\":" << (r.verdicts[k].second ? "true" : "false");
    }
    os << "},\"slacks\":{";
    for (std::size_t k = 0; k < r.slacks.size(); ++k) {
      os << (k ? "," : "") << '"' << r.slacks[k].first << "\":" << format_number(r.slacks[k].second);
    }
    os << "}}\n";
  }
}

}  // namespace monospec
