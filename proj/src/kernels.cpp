#include "monospec/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace monospec::kernels {

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa detected_isa() noexcept {
#if defined(MONOSPEC_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

namespace {

Isa initial_isa() noexcept {
  const char* env = std::getenv("MONOSPEC_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return detected_isa();
}

std::atomic<Isa>& isa_slot() {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

void require_sizes(const DominanceBatch& in) {
  const std::size_t n = in.size();
  if (in.b.size() != n || in.c.size() != n || in.d.size() != n) {
    throw std::invalid_argument("dominance batch columns differ in length");
  }
}

}  // namespace

Isa active_isa() noexcept { return isa_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) {
    throw std::invalid_argument("AVX2 kernels are not available on this machine");
  }
  isa_slot().store(isa, std::memory_order_relaxed);
}

namespace detail {

void eigenpairs_scalar(const double* a, const double* b, const double* c, const double* d,
                       std::size_t n, double* l2, double* l3) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = a[i] - d[i];
    double disc = diff * diff + 4.0 * (b[i] * c[i]);
    disc = disc > 0.0 ? disc : 0.0;
    const double root = std::sqrt(disc);
    const double tr = a[i] + d[i];
    l2[i] = (tr + root) * 0.5;
    l3[i] = (tr - root) * 0.5;
  }
}

void lemma1_slacks_scalar(const double* a, const double* b, const double* c, const double* d,
                          std::size_t n, double* out) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    out[0 * n + i] = 1.0 - (a[i] + c[i]);
    out[1 * n + i] = 1.0 - (b[i] + c[i]);
    out[2 * n + i] = 1.0 - (b[i] + d[i]);
    out[3 * n + i] = 0.25 - a[i] * c[i];
    out[4 * n + i] = 0.25 - b[i] * c[i];
    out[5 * n + i] = 0.25 - b[i] * d[i];
    out[6 * n + i] = a[i] + d[i];
    out[7 * n + i] = (a[i] * d[i] - b[i] * c[i]) + 0.25;
  }
}

}  // namespace detail

void eigenpairs(const DominanceBatch& in, std::span<double> lambda2, std::span<double> lambda3) {
  require_sizes(in);
  const std::size_t n = in.size();
  if (lambda2.size() != n || lambda3.size() != n) {
    throw std::invalid_argument("eigenpair output length mismatch");
  }
#if defined(MONOSPEC_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    detail::eigenpairs_avx2(in.a.data(), in.b.data(), in.c.data(), in.d.data(), n,
                            lambda2.data(), lambda3.data());
    return;
  }
#endif
  detail::eigenpairs_scalar(in.a.data(), in.b.data(), in.c.data(), in.d.data(), n,
                            lambda2.data(), lambda3.data());
}

void lemma1_slacks(const DominanceBatch& in, std::span<double> out) {
  require_sizes(in);
  const std::size_t n = in.size();
  if (out.size() != kLemma1Constraints * n) {
    throw std::invalid_argument("lemma1 output must hold 8 slacks per matrix");
  }
#if defined(MONOSPEC_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    detail::lemma1_slacks_avx2(in.a.data(), in.b.data(), in.c.data(), in.d.data(), n,
                               out.data());
    return;
  }
#endif
  detail::lemma1_slacks_scalar(in.a.data(), in.b.data(), in.c.data(), in.d.data(), n,
                               out.data());
}

}  // namespace monospec::kernels
