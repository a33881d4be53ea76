#include "altruism/sde/model.hpp"

#include <algorithm>

#include "altruism/errors.hpp"

namespace altruism {

std::string to_string(BoundaryPolicy p) {
  return p == BoundaryPolicy::full_truncation ? "full_truncation" : "reflect_clamp";
}

BoundaryPolicy parse_boundary_policy(const std::string& s) {
  if (s == "full_truncation") return BoundaryPolicy::full_truncation;
  if (s == "reflect_clamp") return BoundaryPolicy::reflect_clamp;
  throw ConfigError("unknown boundary policy: " + s);
}

std::vector<std::string> SdeModel::component_names() const {
  std::vector<std::string> names;
  names.reserve(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) names.push_back("x[" + std::to_string(k) + "]");
  return names;
}

void SdeModel::step(double t, std::span<double> x, std::span<const double> normals,
                    const StepContext& ctx, StepWorkspace& ws) const {
  euler_step_generic(*this, t, x, normals, ctx, ws);
}

double apply_boundary(double x, Bounds b, BoundaryPolicy policy) {
  if (policy == BoundaryPolicy::full_truncation) return x;
  if (x < b.lo) x = b.lo + (b.lo - x);
  if (x > b.hi) x = b.hi - (x - b.hi);
  return clamp_to(x, b);
}

void euler_step_generic(const SdeModel& model, double t, std::span<double> x,
                        std::span<const double> normals, const StepContext& ctx,
                        StepWorkspace& ws) {
  const std::size_t n = x.size();
  ws.resize(n);
  for (std::size_t k = 0; k < n; ++k) ws.truncated[k] = clamp_to(x[k], model.bounds(k));
  model.drift(t, ws.truncated, ws.drift);
  model.diffusion(t, ws.truncated, ws.diffusion);
  for (std::size_t k = 0; k < n; ++k) {
    const double next = x[k] + ws.drift[k] * ctx.dt + ws.diffusion[k] * ctx.sqrt_dt * normals[k];
    x[k] = apply_boundary(next, model.bounds(k), ctx.policy);
  }
}

}  // namespace altruism
