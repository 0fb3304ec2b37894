// AVX2 variants of the batched dominance kernels. Functions carry a target
// attribute instead of building the whole file with -mavx2, so no inline
// library code gets emitted with AVX2 encodings. Operation order matches the
// scalar reference exactly.

#include <immintrin.h>

#include <cstddef>

#include "monospec/kernels.hpp"

namespace monospec::kernels::detail {

__attribute__((target("avx2"))) void eigenpairs_avx2(const double* a, const double* b,
                                                      const double* c, const double* d,
                                                      std::size_t n, double* l2,
                                                      double* l3) noexcept {
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    const __m256d vc = _mm256_loadu_pd(c + i);
    const __m256d vd = _mm256_loadu_pd(d + i);
    const __m256d diff = _mm256_sub_pd(va, vd);
    __m256d disc = _mm256_add_pd(_mm256_mul_pd(diff, diff),
                                 _mm256_mul_pd(four, _mm256_mul_pd(vb, vc)));
    // max(disc, 0) with NaN-free inputs matches the scalar ternary.
    disc = _mm256_max_pd(disc, zero);
    const __m256d root = _mm256_sqrt_pd(disc);
    const __m256d tr = _mm256_add_pd(va, vd);
    _mm256_storeu_pd(l2 + i, _mm256_mul_pd(_mm256_add_pd(tr, root), half));
    _mm256_storeu_pd(l3 + i, _mm256_mul_pd(_mm256_sub_pd(tr, root), half));
  }
  if (i < n) eigenpairs_scalar(a + i, b + i, c + i, d + i, n - i, l2 + i, l3 + i);
}

__attribute__((target("avx2"))) void lemma1_slacks_avx2(const double* a, const double* b,
                                                         const double* c, const double* d,
                                                         std::size_t n, double* out) noexcept {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    const __m256d vc = _mm256_loadu_pd(c + i);
    const __m256d vd = _mm256_loadu_pd(d + i);
    _mm256_storeu_pd(out + 0 * n + i, _mm256_sub_pd(one, _mm256_add_pd(va, vc)));
    _mm256_storeu_pd(out + 1 * n + i, _mm256_sub_pd(one, _mm256_add_pd(vb, vc)));
    _mm256_storeu_pd(out + 2 * n + i, _mm256_sub_pd(one, _mm256_add_pd(vb, vd)));
    _mm256_storeu_pd(out + 3 * n + i, _mm256_sub_pd(quarter, _mm256_mul_pd(va, vc)));
    _mm256_storeu_pd(out + 4 * n + i, _mm256_sub_pd(quarter, _mm256_mul_pd(vb, vc)));
    _mm256_storeu_pd(out + 5 * n + i, _mm256_sub_pd(quarter, _mm256_mul_pd(vb, vd)));
    _mm256_storeu_pd(out + 6 * n + i, _mm256_add_pd(va, vd));
    const __m256d det = _mm256_sub_pd(_mm256_mul_pd(va, vd), _mm256_mul_pd(vb, vc));
    _mm256_storeu_pd(out + 7 * n + i, _mm256_add_pd(det, quarter));
  }
  // Output stride is the full batch length, so the tail cannot reuse the scalar kernel.
  for (; i < n; ++i) {
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

}  // namespace monospec::kernels::detail
