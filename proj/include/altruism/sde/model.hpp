#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace altruism {

enum class BoundaryPolicy {
  /// Coefficients see the state clamped into the domain; the unclamped auxiliary state is
  /// carried to the next step and only its projection is observed.
  full_truncation,
  reflect_clamp,  ///< overshoot is reflected at the violated bound, then clamped
};

std::string to_string(BoundaryPolicy p);
BoundaryPolicy parse_boundary_policy(const std::string& s);

struct Bounds {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
};

inline constexpr Bounds kUnitInterval{0.0, 1.0};
inline constexpr Bounds kHalfLine{0.0, std::numeric_limits<double>::infinity()};

struct StepContext {
  double dt = 1e-3;
  double sqrt_dt = 0.0316227766016838;
  BoundaryPolicy policy = BoundaryPolicy::full_truncation;
};

/// Scratch buffers reused across steps of one trajectory.
struct StepWorkspace {
  std::vector<double> drift;
  std::vector<double> diffusion;
  std::vector<double> truncated;

  void resize(std::size_t n) {
    drift.resize(n);
    diffusion.resize(n);
    truncated.resize(n);
  }
};

/// A diagonal-noise SDE on a product domain. States are laid out channel-major:
/// component k is channel k / demes() of deme k % demes(), and is driven by its
/// own Brownian motion.
class SdeModel {
 public:
  virtual ~SdeModel() = default;

  virtual std::size_t demes() const = 0;
  virtual std::size_t channels() const = 0;
  std::size_t dimension() const { return demes() * channels(); }

  virtual std::vector<std::string> component_names() const;
  virtual Bounds bounds(std::size_t component) const = 0;

  /// Drift per component. `x` lies inside the domain.
  virtual void drift(double t, std::span<const double> x, std::span<double> out) const = 0;

  /// Diffusion coefficient (the square root) per component. `x` lies inside the domain.
  virtual void diffusion(double t, std::span<const double> x, std::span<double> out) const = 0;

  /// Advances the integrator state `x` by one Euler-Maruyama step. Under full_truncation `x`
  /// may sit outside the domain. Overrides must agree with euler_step_generic.
  virtual void step(double t, std::span<double> x, std::span<const double> normals,
                    const StepContext& ctx, StepWorkspace& ws) const;
};

/// Reference step: x + drift(clamp(x)) dt + diffusion(clamp(x)) sqrt(dt) xi. Under
/// reflect_clamp the result is reflected and clamped; under full_truncation it is kept as is.
void euler_step_generic(const SdeModel& model, double t, std::span<double> x,
                        std::span<const double> normals, const StepContext& ctx,
                        StepWorkspace& ws);

/// State after a step: unchanged under full_truncation, reflected then clamped otherwise.
double apply_boundary(double x, Bounds b, BoundaryPolicy policy);

/// Projection into [b.lo, b.hi]; NaN passes through.
inline double clamp_to(double x, Bounds b) { return std::min(std::max(x, b.lo), b.hi); }

}  // namespace altruism
