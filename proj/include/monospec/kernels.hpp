#pragma once

// Batched closed-form kernels over 2x2 dominance matrices stored as
// structure-of-arrays (a, b, c, d row-major entries).
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant with
// identical operation order. The variant is picked once at runtime; setting
// MONOSPEC_SIMD=scalar forces the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace monospec::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;
/// Best ISA supported by this CPU and build.
Isa detected_isa() noexcept;
/// ISA used by the dispatching entry points (detected, unless overridden).
Isa active_isa() noexcept;
void set_active_isa(Isa isa);

inline constexpr std::size_t kLemma1Constraints = 8;

struct DominanceBatch {
  std::span<const double> a, b, c, d;
  std::size_t size() const noexcept { return a.size(); }
};

/// lambda2/lambda3 = (a + d +- sqrt((a-d)^2 + 4bc)) / 2; the discriminant is clamped at 0.
void eigenpairs(const DominanceBatch& in, std::span<double> lambda2, std::span<double> lambda3);

/// Writes 8 slacks per matrix, constraint-major: out[k * N + i]. Order:
/// 1-(a+c), 1-(b+c), 1-(b+d), 1/4-ac, 1/4-bc, 1/4-bd, a+d, ad-bc+1/4.
void lemma1_slacks(const DominanceBatch& in, std::span<double> out);

namespace detail {

void eigenpairs_scalar(const double* a, const double* b, const double* c, const double* d,
                       std::size_t n, double* l2, double* l3) noexcept;
void lemma1_slacks_scalar(const double* a, const double* b, const double* c, const double* d,
                          std::size_t n, double* out) noexcept;

#if defined(MONOSPEC_HAVE_AVX2)
void eigenpairs_avx2(const double* a, const double* b, const double* c, const double* d,
                     std::size_t n, double* l2, double* l3) noexcept;
void lemma1_slacks_avx2(const double* a, const double* b, const double* c, const double* d,
                        std::size_t n, double* out) noexcept;
#endif

}  // namespace detail
}  // namespace monospec::kernels
