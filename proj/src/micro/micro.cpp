#include "altruism/micro/micro.hpp"

#include <algorithm>
#include <cmath>

#include "altruism/errors.hpp"

namespace altruism {

namespace {

std::vector<std::string> channel_names(std::initializer_list<const char*> channels, std::size_t D) {
  std::vector<std::string> names;
  for (const char* c : channels) {
    for (std::size_t i = 0; i < D; ++i) names.push_back(std::string(c) + "[" + std::to_string(i) + "]");
  }
  return names;
}

/// sum_j m(i,j) (v_j - v_i)
double migration(const DemeGraph& g, std::span<const double> v, std::size_t i) {
  const std::size_t D = g.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < D; ++j) acc += g.m(i, j) * (v[j] - v[i]);
  return acc;
}

}  // namespace

AcpModel::AcpModel(EcologyParams p, ScalingParams sp, DemeGraph g, double floor_eps)
    : p_(p), sp_(sp), graph_(std::move(g)), floor_eps_(floor_eps) {
  validate(p_);
  validate(sp_);
}

std::vector<std::string> AcpModel::component_names() const {
  return channel_names({"A", "C", "P"}, demes());
}

void AcpModel::drift(double, std::span<const double> x, std::span<double> out) const {
  const std::size_t D = demes();
  const auto A = x.subspan(0, D);
  const auto C = x.subspan(D, D);
  const auto P = x.subspan(2 * D, D);
  for (std::size_t i = 0; i < D; ++i) {
    const double H = A[i] + C[i];
    const double Hf = std::max(H, floor_eps_);
    const double growth = p_.lambda * (1.0 - H / p_.K) - p_.delta * P[i];
    out[i] = sp_.kappa_H * migration(graph_, A, i) + A[i] * (growth - sp_.alpha) +
             sp_.iota_H * A[i] / Hf;
    out[D + i] = sp_.kappa_H * migration(graph_, C, i) + C[i] * growth + sp_.iota_H * C[i] / Hf;
    out[2 * D + i] = sp_.kappa_P * migration(graph_, P, i) +
                     P[i] * (-p_.nu - p_.gamma * P[i] + p_.eta * C[i] + (p_.eta - p_.rho) * A[i]) +
                     sp_.iota_P;
  }
}

void AcpModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  const std::size_t D = demes();
  for (std::size_t i = 0; i < D; ++i) {
    out[i] = std::sqrt(sp_.beta_H * x[i]);
    out[D + i] = std::sqrt(sp_.beta_H * x[D + i]);
    out[2 * D + i] = std::sqrt(sp_.beta_P * x[2 * D + i]);
  }
}

HfpModel::HfpModel(EcologyParams p, ScalingParams sp, DemeGraph g, double floor_eps)
    : p_(p), sp_(sp), graph_(std::move(g)), floor_eps_(floor_eps) {
  validate(p_);
  validate(sp_);
}

std::vector<std::string> HfpModel::component_names() const {
  return channel_names({"H", "F", "P"}, demes());
}

void HfpModel::drift(double, std::span<const double> x, std::span<double> out) const {
  const std::size_t D = demes();
  const auto H = x.subspan(0, D);
  const auto F = x.subspan(D, D);
  const auto P = x.subspan(2 * D, D);
  const double ratio_cap = 1.0 / floor_eps_;
  for (std::size_t i = 0; i < D; ++i) {
    const double Hi = std::max(H[i], floor_eps_);
    double fmig = 0.0;
    for (std::size_t j = 0; j < D; ++j) {
      const double ratio = std::clamp(H[j] / Hi, 0.0, ratio_cap);
      fmig += graph_.m(i, j) * (F[j] - F[i]) * ratio;
    }
    out[i] = sp_.kappa_H * migration(graph_, H, i) + (p_.lambda - sp_.alpha * F[i]) * H[i] -
             (p_.lambda / p_.K) * H[i] * H[i] - p_.delta * P[i] * H[i] + sp_.iota_H;
    out[D + i] = sp_.kappa_H * fmig - sp_.alpha * F[i] * (1.0 - F[i]);
    out[2 * D + i] = sp_.kappa_P * migration(graph_, P, i) - p_.nu * P[i] -
                     p_.gamma * P[i] * P[i] + (p_.eta - p_.rho * F[i]) * P[i] * H[i] + sp_.iota_P;
  }
}

void HfpModel::diffusion(double, std::span<const double> x, std::span<double> out) const {
  const std::size_t D = demes();
  for (std::size_t i = 0; i < D; ++i) {
    const double H = x[i];
    const double F = x[D + i];
    out[i] = std::sqrt(sp_.beta_H * H);
    out[D + i] = std::sqrt(sp_.beta_H * F * (1.0 - F) / std::max(H, floor_eps_));
    out[2 * D + i] = std::sqrt(sp_.beta_P * x[2 * D + i]);
  }
}

AcpModel acp_model(const EcologyParams& p, const ScalingParams& sp, const DemeGraph& g,
                   double floor_eps) {
  return AcpModel(p, sp, g, floor_eps);
}

HfpModel hfp_model(const EcologyParams& p, const ScalingParams& sp, const DemeGraph& g,
                   double floor_eps) {
  return HfpModel(p, sp, g, floor_eps);
}

std::vector<double> acp_to_hfp(std::span<const double> acp, std::size_t D) {
  if (acp.size() != 3 * D) throw ShapeMismatch("ACP state must have 3 D components");
  std::vector<double> out(3 * D);
  for (std::size_t i = 0; i < D; ++i) {
    const double H = acp[i] + acp[D + i];
    out[i] = H;
    out[D + i] = H > 0.0 ? acp[i] / H : 0.0;
    out[2 * D + i] = acp[2 * D + i];
  }
  return out;
}

std::vector<double> hfp_to_acp(std::span<const double> hfp, std::size_t D) {
  if (hfp.size() != 3 * D) throw ShapeMismatch("HFP state must have 3 D components");
  std::vector<double> out(3 * D);
  for (std::size_t i = 0; i < D; ++i) {
    out[i] = hfp[D + i] * hfp[i];
    out[D + i] = (1.0 - hfp[D + i]) * hfp[i];
    out[2 * D + i] = hfp[2 * D + i];
  }
  return out;
}

ScalingParams ScalingSchedule::at(double N, double b) const {
  if (!(N >= 1.0)) throw InvalidParameters("N must be >= 1");
  if (!(b > 0.0)) throw InvalidParameters("b must be positive");
  ScalingParams sp;
  sp.N = N;
  sp.kappa_H = kappa / N;
  sp.kappa_P = kappa / N;
  sp.alpha = alpha / N;
  sp.beta_H = beta_target / (N * b);
  sp.beta_P = sp.beta_H;
  sp.iota_H = std::max(1.5 * sp.beta_H, iota_floor / N);
  sp.iota_P = std::max(sp.beta_P, iota_floor / N);
  return sp;
}

Path rescaled_frequency_run(const EcologyParams& p, const ScalingSchedule& sched,
                            const DemeGraph& g, double N, double t_end_slow,
                            double slow_interval, const IntegratorConfig& cfg,
                            std::span<const double> hfp0, std::uint64_t seed,
                            std::uint64_t replica) {
  const LimitConstants lc = derive_limit_constants(p);
  const HfpModel model(p, sched.at(N, lc.b), g, cfg.floor_eps);
  IntegratorConfig fast = cfg;
  fast.t_end = t_end_slow * N;
  const double stride = slow_interval * N / cfg.dt;
  if (!(stride >= 1.0) || std::abs(stride - std::round(stride)) > 1e-6 * stride) {
    throw ConfigError("slow_interval * N must be a positive multiple of dt");
  }
  fast.record_stride = static_cast<std::size_t>(std::llround(stride));
  Path path = integrate(model, hfp0, fast, seed, replica);
  for (double& t : path.times) t /= N;
  return path;
}

std::vector<double> equilibrium_hfp_state(const EcologyParams& p, std::span<const double> F0) {
  const LimitConstants lc = derive_limit_constants(p);
  const std::size_t D = F0.size();
  std::vector<double> x(3 * D);
  for (std::size_t i = 0; i < D; ++i) {
    const auto eq = equilibrium_pair(p, lc, F0[i]);
    x[i] = eq.h;
    x[D + i] = F0[i];
    x[2 * D + i] = eq.p;
  }
  return x;
}

}  // namespace altruism
