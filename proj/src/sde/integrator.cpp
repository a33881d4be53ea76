#include "altruism/sde/integrator.hpp"

#include <cmath>

#include "altruism/errors.hpp"
#include "altruism/sde/rng.hpp"

namespace altruism {

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("integrator.dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("integrator.t_end must be >= 0");
  if (record_stride < 1) throw ConfigError("integrator.record_stride must be >= 1");
  if (!(floor_eps > 0.0 && floor_eps <= 1e-3)) {
    throw ConfigError("integrator.floor_eps must lie in (0, 1e-3]");
  }
}

std::size_t IntegratorConfig::steps() const {
  return static_cast<std::size_t>(std::llround(t_end / dt));
}

StepContext IntegratorConfig::step_context() const {
  return {dt, std::sqrt(dt), boundary_policy};
}

Path integrate(const SdeModel& model, std::span<const double> x0, const IntegratorConfig& cfg,
               std::uint64_t seed, std::uint64_t replica) {
  cfg.validate();
  const std::size_t dim = model.dimension();
  if (x0.size() != dim) throw ShapeMismatch("initial state has wrong dimension");
  for (std::size_t k = 0; k < dim; ++k) {
    const Bounds b = model.bounds(k);
    if (!(x0[k] >= b.lo && x0[k] <= b.hi)) {
      throw DomainError("initial state component " + std::to_string(k) + " outside the domain");
    }
  }

  const std::size_t steps = cfg.steps();
  const std::size_t records = steps / cfg.record_stride + 1;
  Path path;
  path.dimension = dim;
  path.names = model.component_names();
  path.meta = {cfg, seed, replica};
  path.times.reserve(records);
  path.states.reserve(records * dim);

  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> normals(dim);
  NoiseSource noise(seed, replica, model.demes(), model.channels());
  StepWorkspace ws;
  ws.resize(dim);
  const StepContext ctx = cfg.step_context();

  auto record = [&](double t) {
    path.times.push_back(t);
    for (std::size_t k = 0; k < dim; ++k) path.states.push_back(clamp_to(x[k], model.bounds(k)));
  };
  record(0.0);
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * cfg.dt;
    noise.fill(normals);
    model.step(t, x, normals, ctx, ws);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!std::isfinite(x[k])) throw NonFiniteState(n + 1, k);
    }
    if ((n + 1) % cfg.record_stride == 0) record(static_cast<double>(n + 1) * cfg.dt);
  }
  return path;
}

}  // namespace altruism
