#include "altruism/limit/limit.hpp"

#include <algorithm>
#include <cmath>

#include "altruism/errors.hpp"
#include "altruism/sde/rng.hpp"

namespace altruism {

void WfParams::validate() const {
  auto ok = [](double v) { return v >= 0.0 && std::isfinite(v); };
  if (!ok(kappa) || !ok(alpha) || !ok(beta)) {
    throw InvalidParameters("kappa, alpha and beta must be nonnegative and finite");
  }
  if (!(a > 1.0) || !std::isfinite(a)) throw InvalidParameters("a must exceed 1");
}

namespace {

std::vector<std::string> indexed(const char* base, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(base) + "[" + std::to_string(i) + "]");
  return names;
}

void wf_diffusion(const WfParams& wp, std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::sqrt(std::max(wf_variance(wp, x[i]), 0.0));
}

}  // namespace

WfSpatialModel::WfSpatialModel(WfParams wp, DemeGraph g) : wp_(wp), graph_(std::move(g)) {
  wp_.validate();
}

std::vector<std::string> WfSpatialModel::component_names() const { return indexed("X", demes()); }

void WfSpatialModel::drift(double, std::span<const double> x, std::span<double> out) const {
  const std::size_t D = demes();
  for (std::size_t i = 0; i < D; ++i) {
    const double gi = wp_.a - x[i];
    double mig = 0.0;
    for (std::size_t j = 0; j < D; ++j) {
      const double mij = graph_.m(i, j);
      if (mij != 0.0) mig += mij * (gi / (wp_.a - x[j])) * (x[j] - x[i]);
    }
    out[i] = wp_.kappa * mig - wp_.alpha * x[i] * (1.0 - x[i]);
  }
}

void WfSpatialModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  wf_diffusion(wp_, x, out);
}

MeanfieldModel::MeanfieldModel(WfParams wp, std::size_t D) : wp_(wp), D_(D) {
  wp_.validate();
  if (D_ == 0) throw InvalidSize("mean-field model needs D >= 1");
}

std::vector<std::string> MeanfieldModel::component_names() const { return indexed("X", D_); }

void MeanfieldModel::drift(double, std::span<const double> x, std::span<double> out) const {
  double mean = 0.0;
  for (double v : x) mean += inverse_gap(wp_.a, v);
  mean /= static_cast<double>(D_);
  for (std::size_t i = 0; i < D_; ++i) out[i] = wf_drift(wp_, mean, x[i]);
}

void MeanfieldModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  wf_diffusion(wp_, x, out);
}

void MeanfieldModel::step(double, std::span<double> x, std::span<const double> normals,
                          const StepContext& ctx, StepWorkspace&) const {
  const double theta = simd::mean_inverse_gap(wp_.a, x);
  simd::wf_step(wp_.coefficients(), theta, x, normals, ctx);
}

McKeanVlasovModel::McKeanVlasovModel(WfParams wp, std::size_t particles, MeanProvider provider)
    : wp_(wp), D_(particles), provider_(std::move(provider)) {
  wp_.validate();
  if (D_ == 0) throw InvalidSize("McKean-Vlasov particle system needs at least one particle");
}

std::vector<std::string> McKeanVlasovModel::component_names() const { return indexed("Z", D_); }

double McKeanVlasovModel::estimate(double t, std::span<const double> x) const {
  if (provider_) return provider_(t, x);
  return simd::mean_inverse_gap(wp_.a, x);
}

void McKeanVlasovModel::drift(double t, std::span<const double> x, std::span<double> out) const {
  const double theta = estimate(t, x);
  for (std::size_t i = 0; i < D_; ++i) out[i] = wf_drift(wp_, theta, x[i]);
}

void McKeanVlasovModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  wf_diffusion(wp_, x, out);
}

void McKeanVlasovModel::step(double t, std::span<double> x, std::span<const double> normals,
                             const StepContext& ctx, StepWorkspace& ws) const {
  double theta;
  if (provider_) {
    ws.truncated.resize(D_);
    for (std::size_t i = 0; i < D_; ++i) ws.truncated[i] = clamp_to(x[i], kUnitInterval);
    theta = provider_(t, ws.truncated);
  } else {
    theta = simd::mean_inverse_gap(wp_.a, x);
  }
  simd::wf_step(wp_.coefficients(), theta, x, normals, ctx);
}

FrozenThetaModel::FrozenThetaModel(WfParams wp, double theta, std::size_t copies)
    : wp_(wp), theta_(theta), copies_(copies) {
  wp_.validate();
  if (!(theta > 1.0 / wp_.a && theta < 1.0 / (wp_.a - 1.0))) {
    throw ThetaOutOfRange("theta must lie strictly between 1/a and 1/(a-1)");
  }
  if (copies_ == 0) throw InvalidSize("frozen-theta model needs at least one copy");
}

std::vector<std::string> FrozenThetaModel::component_names() const {
  return copies_ == 1 ? std::vector<std::string>{"Z"} : indexed("Z", copies_);
}

void FrozenThetaModel::drift(double, std::span<const double> x, std::span<double> out) const {
  for (std::size_t i = 0; i < copies_; ++i) out[i] = wf_drift(wp_, theta_, x[i]);
}

void FrozenThetaModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  wf_diffusion(wp_, x, out);
}

void FrozenThetaModel::step(double, std::span<double> x, std::span<const double> normals,
                            const StepContext& ctx, StepWorkspace&) const {
  simd::wf_step(wp_.coefficients(), theta_, x, normals, ctx);
}

SingleColonyModel::SingleColonyModel(WfParams wp) : wp_(wp) { wp_.validate(); }

void SingleColonyModel::drift(double, std::span<const double> x, std::span<double> out) const {
  const double y = x[0];
  out[0] = -(wp_.kappa / wp_.a) * y * (wp_.a - y) - wp_.alpha * y * (1.0 - y);
}

void SingleColonyModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  wf_diffusion(wp_, x, out);
}

WfSpatialModel wf_spatial_model(const WfParams& wp, const DemeGraph& g) { return {wp, g}; }
MeanfieldModel meanfield_model(const WfParams& wp, std::size_t D) { return {wp, D}; }
McKeanVlasovModel mckean_vlasov_model(const WfParams& wp, std::size_t particles,
                                      MeanProvider provider) {
  return {wp, particles, std::move(provider)};
}
FrozenThetaModel frozen_theta_model(const WfParams& wp, double theta, std::size_t copies) {
  return {wp, theta, copies};
}
SingleColonyModel single_colony_model(const WfParams& wp) { return SingleColonyModel(wp); }

double lipschitz_constant(const WfParams& wp) {
  wp.validate();
  const double am1 = wp.a - 1.0;
  return std::max({wp.beta * wp.a, wp.kappa * wp.a * wp.a, wp.kappa + wp.alpha, 1.0 / (am1 * am1)});
}

InitialSampler uniform_initial(std::uint64_t seed, std::size_t particles, double lo, double hi) {
  return [=](std::uint64_t replica) {
    std::vector<double> x(particles);
    for (std::size_t j = 0; j < particles; ++j) {
      RngStream s(seed, StreamId{replica, j, kInitChannel});
      x[j] = s.uniform(lo, hi);
    }
    return x;
  };
}

}  // namespace altruism
