// Compiled with -mavx2 only; never called unless the CPU reports AVX2.

#include <immintrin.h>

#include "ader/kernels/kernels.hpp"

namespace ader::kernels {

void weno_avx2(const WenoTables& t, const double* center, std::size_t n, double* out,
               std::size_t out_stride) {
  const int nc = t.degree + 1;
  const int ns = t.n_stencils;
  const __m256d eps = _mm256_set1_pd(t.epsilon);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t c = 0;
  for (; c + 4 <= n; c += 4) {
    const double* v = center + c;
    __m256d poly[kMaxStencils][kMaxCoeffs];
    __m256d weight[kMaxStencils];
    for (int s = 0; s < ns; ++s) {
      const double* cells = v + t.start[s];
      for (int k = 0; k < nc; ++k) {
        __m256d acc = _mm256_setzero_pd();
        for (int j = 0; j < nc; ++j)
          acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(t.coeff[s][k][j]),
                                                 _mm256_loadu_pd(cells + j)));
        poly[s][k] = acc;
      }
      __m256d sigma = _mm256_setzero_pd();
      for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
          sigma = _mm256_add_pd(
              sigma, _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(t.smoothness[a][b]), poly[s][a]),
                                   poly[s][b]));
      const __m256d base = _mm256_add_pd(sigma, eps);
      __m256d denom = one;
      for (int r = 0; r < t.power; ++r) denom = _mm256_mul_pd(denom, base);
      weight[s] = _mm256_div_pd(_mm256_set1_pd(t.linear_weight[s]), denom);
    }
    __m256d total = _mm256_setzero_pd();
    for (int s = 0; s < ns; ++s) total = _mm256_add_pd(total, weight[s]);
    for (int k = 0; k < nc; ++k) {
      __m256d acc = _mm256_setzero_pd();
      for (int s = 0; s < ns; ++s)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_div_pd(weight[s], total), poly[s][k]));
      _mm256_storeu_pd(out + static_cast<std::size_t>(k) * out_stride + c, acc);
    }
  }
  if (c < n) weno_scalar(t, center + c, n - c, out + c, out_stride);
}

void fv_update_avx2(const double* q, const double* flux, const double* src, std::size_t len,
                    std::size_t m, double dt_dx, double dt, double* out) {
  const __m256d r = _mm256_set1_pd(dt_dx);
  const __m256d h = _mm256_set1_pd(dt);
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(flux + j + m), _mm256_loadu_pd(flux + j));
    const __m256d conv = _mm256_sub_pd(_mm256_loadu_pd(q + j), _mm256_mul_pd(r, diff));
    _mm256_storeu_pd(out + j, _mm256_add_pd(conv, _mm256_mul_pd(h, _mm256_loadu_pd(src + j))));
  }
  if (j < len) fv_update_scalar(q + j, flux + j, src + j, len - j, m, dt_dx, dt, out + j);
}

}  // namespace ader::kernels
