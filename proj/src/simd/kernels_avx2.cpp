#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "altruism/simd/kernels.hpp"

namespace altruism::simd::avx2 {

// Max/min operand order keeps NaN propagation identical to std::max(v, lo) and
// std::min(v, hi): the intrinsics return the second operand when either is NaN.

void wf_step(const WfCoefficients& c, double theta, double* x, const double* normals,
             std::size_t n, double dt, double sqrt_dt, BoundaryPolicy policy) {
  const bool reflect = policy == BoundaryPolicy::reflect_clamp;
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d va = _mm256_set1_pd(c.a);
  const __m256d vkappa = _mm256_set1_pd(c.kappa);
  const __m256d valpha = _mm256_set1_pd(c.alpha);
  const __m256d vbeta = _mm256_set1_pd(c.beta);
  const __m256d vtheta = _mm256_set1_pd(theta);
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d vsdt = _mm256_set1_pd(sqrt_dt);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d z = _mm256_loadu_pd(x + i);
    const __m256d zt = _mm256_min_pd(one, _mm256_max_pd(zero, z));
    const __m256d g = _mm256_sub_pd(va, zt);
    const __m256d mig =
        _mm256_mul_pd(_mm256_mul_pd(vkappa, g), _mm256_sub_pd(_mm256_mul_pd(g, vtheta), one));
    const __m256d sel = _mm256_mul_pd(_mm256_mul_pd(valpha, zt), _mm256_sub_pd(one, zt));
    const __m256d drift = _mm256_sub_pd(mig, sel);
    __m256d var = _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(vbeta, g), zt), _mm256_sub_pd(one, zt));
    var = _mm256_max_pd(zero, var);
    const __m256d noise = _mm256_mul_pd(_mm256_mul_pd(_mm256_sqrt_pd(var), vsdt),
                                        _mm256_loadu_pd(normals + i));
    __m256d next = _mm256_add_pd(_mm256_add_pd(z, _mm256_mul_pd(drift, vdt)), noise);
    if (reflect) {
      const __m256d below = _mm256_cmp_pd(next, zero, _CMP_LT_OQ);
      next = _mm256_blendv_pd(next, _mm256_add_pd(zero, _mm256_sub_pd(zero, next)), below);
      const __m256d above = _mm256_cmp_pd(next, one, _CMP_GT_OQ);
      next = _mm256_blendv_pd(next, _mm256_sub_pd(one, _mm256_sub_pd(next, one)), above);
      next = _mm256_min_pd(one, _mm256_max_pd(zero, next));
    }
    _mm256_storeu_pd(x + i, next);
  }
  if (i < n) scalar::wf_step(c, theta, x + i, normals + i, n - i, dt, sqrt_dt, policy);
}

double inverse_gap_sum(double a, const double* x, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d va = _mm256_set1_pd(a);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d z = _mm256_min_pd(one, _mm256_max_pd(zero, _mm256_loadu_pd(x + i)));
    acc = _mm256_add_pd(acc, _mm256_div_pd(one, _mm256_sub_pd(va, z)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) sum += 1.0 / (a - std::min(std::max(x[i], 0.0), 1.0));
  return sum;
}

}  // namespace altruism::simd::avx2
