#include <algorithm>
#include <cmath>

#include "altruism/simd/kernels.hpp"

namespace altruism::simd::scalar {

void wf_step(const WfCoefficients& c, double theta, double* x, const double* normals,
             std::size_t n, double dt, double sqrt_dt, BoundaryPolicy policy) {
  const bool reflect = policy == BoundaryPolicy::reflect_clamp;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = x[i];
    const double zt = std::min(std::max(z, 0.0), 1.0);
    const double g = c.a - zt;
    const double drift = (c.kappa * g) * (g * theta - 1.0) - (c.alpha * zt) * (1.0 - zt);
    const double var = std::max(((c.beta * g) * zt) * (1.0 - zt), 0.0);
    double next = (z + drift * dt) + (std::sqrt(var) * sqrt_dt) * normals[i];
    if (reflect) {
      if (next < 0.0) next = 0.0 + (0.0 - next);
      if (next > 1.0) next = 1.0 - (next - 1.0);
      next = std::min(std::max(next, 0.0), 1.0);
    }
    x[i] = next;
  }
}

double inverse_gap_sum(double a, const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) lane[j] += 1.0 / (a - std::min(std::max(x[i + j], 0.0), 1.0));
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) sum += 1.0 / (a - std::min(std::max(x[i], 0.0), 1.0));
  return sum;
}

}  // namespace altruism::simd::scalar
