// AVX2 variants. Each lane performs the exact operation sequence of the
// scalar reference (same multiplies, adds, divides, sqrt, in the same
// order), so results are bit-identical; the build disables FP
// contraction to keep the scalar side from fusing into FMAs. Loop
// remainders fall through to the scalar routines.

#if defined(AGINGFLOW_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace agingflow::kernels {

void gradient_avx2(const double* u, std::size_t n_cells, double h,
                   double* d) {
  const __m256d hv = _mm256_set1_pd(h);
  std::size_t j = 0;
  for (; j + 4 <= n_cells; j += 4) {
    const __m256d hi = _mm256_loadu_pd(u + j + 1);
    const __m256d lo = _mm256_loadu_pd(u + j);
    _mm256_storeu_pd(d + j, _mm256_div_pd(_mm256_sub_pd(hi, lo), hv));
  }
  gradient_scalar(u + j, n_cells - j, h, d + j);
}

void stress_update_avx2(double* tau, const double* grad_u, const double* f,
                        std::size_t n_cells, double dt_over_lambda,
                        double g_mod) {
  const __m256d c = _mm256_set1_pd(dt_over_lambda);
  const __m256d g = _mm256_set1_pd(g_mod);
  std::size_t j = 0;
  for (; j + 4 <= n_cells; j += 4) {
    const __m256d tv = _mm256_loadu_pd(tau + j);
    const __m256d m1 = _mm256_mul_pd(g, _mm256_loadu_pd(grad_u + j));
    const __m256d m2 = _mm256_mul_pd(_mm256_loadu_pd(f + j), tv);
    const __m256d out =
        _mm256_add_pd(tv, _mm256_mul_pd(c, _mm256_sub_pd(m1, m2)));
    _mm256_storeu_pd(tau + j, out);
  }
  stress_update_scalar(tau + j, grad_u + j, f + j, n_cells - j,
                       dt_over_lambda, g_mod);
}

void fluidity_update_avx2(double* f, const double* tau, std::size_t n_cells,
                          double dt, double nu, double xi) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d xiv = _mm256_set1_pd(xi);
  const __m256d dtv = _mm256_set1_pd(dt);
  const __m256d nu_dt = _mm256_set1_pd(nu * dt);
  const __m256d abs_mask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  std::size_t j = 0;
  for (; j + 4 <= n_cells; j += 4) {
    const __m256d fp = _mm256_loadu_pd(f + j);
    const __m256d at = _mm256_and_pd(abs_mask, _mm256_loadu_pd(tau + j));
    const __m256d e = _mm256_sub_pd(one, _mm256_mul_pd(xiv, at));
    const __m256d b =
        _mm256_add_pd(one, _mm256_mul_pd(_mm256_mul_pd(dtv, fp), e));
    const __m256d aq = _mm256_mul_pd(nu_dt, fp);
    const __m256d disc = _mm256_add_pd(
        _mm256_mul_pd(b, b), _mm256_mul_pd(four, _mm256_mul_pd(aq, fp)));
    const __m256d s = _mm256_sqrt_pd(disc);
    // Both root expressions are evaluated; the unused one may be 0/0 in
    // lanes where fp = 0, which blendv discards.
    const __m256d r_pos =
        _mm256_div_pd(_mm256_mul_pd(two, fp), _mm256_add_pd(b, s));
    const __m256d r_neg =
        _mm256_div_pd(_mm256_sub_pd(s, b), _mm256_mul_pd(two, aq));
    const __m256d b_nonneg = _mm256_cmp_pd(b, zero, _CMP_GE_OQ);
    _mm256_storeu_pd(f + j, _mm256_blendv_pd(r_neg, r_pos, b_nonneg));
  }
  fluidity_update_scalar(f + j, tau + j, n_cells - j, dt, nu, xi);
}

} // namespace agingflow::kernels

#endif // AGINGFLOW_HAVE_AVX2
