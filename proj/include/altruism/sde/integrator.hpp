#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "altruism/sde/model.hpp"

namespace altruism {

struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  std::size_t record_stride = 1;
  BoundaryPolicy boundary_policy = BoundaryPolicy::full_truncation;
  double floor_eps = 1e-6;

  /// Throws ConfigError when an invariant fails.
  void validate() const;
  /// Number of steps, round(t_end / dt).
  std::size_t steps() const;
  StepContext step_context() const;
};

struct PathMeta {
  IntegratorConfig config;
  std::uint64_t seed = 0;
  std::uint64_t replica = 0;
};

/// Recorded trajectory. times[k] = k * record_stride * dt; only full strides are recorded.
struct Path {
  std::vector<double> times;
  std::vector<double> states;  ///< row-major, times.size() x dimension
  std::size_t dimension = 0;
  std::vector<std::string> names;
  PathMeta meta;

  std::size_t size() const noexcept { return times.size(); }
  std::span<const double> state(std::size_t k) const {
    return {states.data() + k * dimension, dimension};
  }
  std::span<double> state(std::size_t k) { return {states.data() + k * dimension, dimension}; }
  double at(std::size_t k, std::size_t component) const {
    return states[k * dimension + component];
  }
};

/// Fixed-step Euler-Maruyama. Throws DomainError if x0 leaves the model's domain and
/// NonFiniteState when any component turns NaN or infinite.
Path integrate(const SdeModel& model, std::span<const double> x0, const IntegratorConfig& cfg,
               std::uint64_t seed, std::uint64_t replica = 0);

}  // namespace altruism
