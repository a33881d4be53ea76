#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "altruism/sde/model.hpp"

namespace altruism::simd {

enum class Isa { scalar, avx2 };

std::string to_string(Isa isa);
bool isa_available(Isa isa);

/// ISA used by kernels(). AVX2 when the CPU supports it, unless the environment
/// variable ALTRUISM_SIMD is set to "scalar".
Isa active_isa();

/// Coefficients shared by the Wright-Fisher family with frequency-dependent migration.
struct WfCoefficients {
  double kappa = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 2.0;
};

/// Kernel signatures. Every variant performs the same floating-point operations
/// in the same order, so results are bit-identical across ISAs.
struct KernelTable {
  /// Euler-Maruyama step of dz = [kappa (a-z)((a-z) theta - 1) - alpha z (1-z)] dt
  ///                              + sqrt(beta (a-z) z (1-z)) dW
  /// for n independent coordinates sharing theta. Coefficients use z clamped to [0,1].
  void (*wf_step)(const WfCoefficients& c, double theta, double* x, const double* normals,
                  std::size_t n, double dt, double sqrt_dt, BoundaryPolicy policy);
  /// Sum of 1/(a - clamp(x_i)), accumulated in four interleaved lanes.
  double (*inverse_gap_sum)(double a, const double* x, std::size_t n);
};

const KernelTable& kernels();
/// Throws ConfigError if `isa` is not available on this machine or build.
const KernelTable& kernels(Isa isa);

namespace scalar {
void wf_step(const WfCoefficients& c, double theta, double* x, const double* normals,
             std::size_t n, double dt, double sqrt_dt, BoundaryPolicy policy);
double inverse_gap_sum(double a, const double* x, std::size_t n);
}  // namespace scalar

#if defined(ALTRUISM_HAVE_AVX2)
namespace avx2 {
void wf_step(const WfCoefficients& c, double theta, double* x, const double* normals,
             std::size_t n, double dt, double sqrt_dt, BoundaryPolicy policy);
double inverse_gap_sum(double a, const double* x, std::size_t n);
}  // namespace avx2
#endif

inline void wf_step(const WfCoefficients& c, double theta, std::span<double> x,
                    std::span<const double> normals, const StepContext& ctx) {
  kernels().wf_step(c, theta, x.data(), normals.data(), x.size(), ctx.dt, ctx.sqrt_dt,
                    ctx.policy);
}

inline double mean_inverse_gap(double a, std::span<const double> x) {
  return kernels().inverse_gap_sum(a, x.data(), x.size()) / static_cast<double>(x.size());
}

}  // namespace altruism::simd
