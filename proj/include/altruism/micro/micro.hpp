#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "altruism/model/graph.hpp"
#include "altruism/model/params.hpp"
#include "altruism/sde/integrator.hpp"
#include "altruism/sde/model.hpp"

namespace altruism {

/// Three-type host/parasite system in (A, C, P) coordinates. Channels: A, C, P.
class AcpModel final : public SdeModel {
 public:
  AcpModel(EcologyParams p, ScalingParams sp, DemeGraph g, double floor_eps = 1e-6);

  std::size_t demes() const override { return graph_.size(); }
  std::size_t channels() const override { return 3; }
  std::vector<std::string> component_names() const override;
  Bounds bounds(std::size_t) const override { return kHalfLine; }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;

 private:
  EcologyParams p_;
  ScalingParams sp_;
  DemeGraph graph_;
  double floor_eps_;
};

/// Same dynamics in (H, F, P) coordinates with H = A + C and F = A / H. Channels: H, F, P.
class HfpModel final : public SdeModel {
 public:
  HfpModel(EcologyParams p, ScalingParams sp, DemeGraph g, double floor_eps = 1e-6);

  std::size_t demes() const override { return graph_.size(); }
  std::size_t channels() const override { return 3; }
  std::vector<std::string> component_names() const override;
  Bounds bounds(std::size_t k) const override {
    return k / demes() == 1 ? kUnitInterval : kHalfLine;
  }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;

  const EcologyParams& ecology() const noexcept { return p_; }
  const ScalingParams& scaling() const noexcept { return sp_; }
  const DemeGraph& graph() const noexcept { return graph_; }

 private:
  EcologyParams p_;
  ScalingParams sp_;
  DemeGraph graph_;
  double floor_eps_;
};

AcpModel acp_model(const EcologyParams& p, const ScalingParams& sp, const DemeGraph& g,
                   double floor_eps = 1e-6);
HfpModel hfp_model(const EcologyParams& p, const ScalingParams& sp, const DemeGraph& g,
                   double floor_eps = 1e-6);

/// (A, C, P) -> (H, F, P); F = 0 where H = 0.
std::vector<double> acp_to_hfp(std::span<const double> acp, std::size_t demes);
std::vector<double> hfp_to_acp(std::span<const double> hfp, std::size_t demes);

/// Maps N to the rates at level N for prescribed limits (kappa, alpha, beta).
struct ScalingSchedule {
  double kappa = 1.0;
  double alpha = 1.0;
  double beta_target = 1.0;
  double iota_floor = 0.05;

  /// b is the limit constant of the ecology; beta_H^N = beta_target / (N b).
  ScalingParams at(double N, double b) const;
};

/// Integrates the HFP system on fast time [0, t_end_slow * N] and records the
/// state every `slow_interval` of slow time. Returned times are in slow units.
/// `cfg.dt` is the fast-time step; cfg.t_end and cfg.record_stride are ignored.
Path rescaled_frequency_run(const EcologyParams& p, const ScalingSchedule& sched,
                            const DemeGraph& g, double N, double t_end_slow,
                            double slow_interval, const IntegratorConfig& cfg,
                            std::span<const double> hfp0, std::uint64_t seed,
                            std::uint64_t replica = 0);

/// Initial HFP state at the host/parasite equilibrium of each deme's frequency.
std::vector<double> equilibrium_hfp_state(const EcologyParams& p, std::span<const double> F0);

}  // namespace altruism
