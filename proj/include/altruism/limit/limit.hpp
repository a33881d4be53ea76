#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "altruism/model/graph.hpp"
#include "altruism/sde/ensemble.hpp"
#include "altruism/sde/model.hpp"
#include "altruism/simd/kernels.hpp"

namespace altruism {

/// Constants of the limiting frequency dynamics.
struct WfParams {
  double kappa = 1.0;  ///< migration rate
  double alpha = 1.0;  ///< selection cost of the altruistic trait
  double beta = 1.0;   ///< diffusion coefficient
  double a = 2.0;      ///< shifted frequency scale, > 1

  /// Throws InvalidParameters unless kappa, alpha, beta >= 0 and a > 1.
  void validate() const;
  simd::WfCoefficients coefficients() const { return {kappa, alpha, beta, a}; }
};

/// psi(x) = 1 / (a - x)
inline double inverse_gap(double a, double x) { return 1.0 / (a - x); }

/// xi(u, x) = kappa (a - x)((a - x) u - 1) - alpha x (1 - x): drift given the mean of psi.
inline double wf_drift(const WfParams& wp, double u, double x) {
  const double g = wp.a - x;
  return wp.kappa * g * (g * u - 1.0) - wp.alpha * x * (1.0 - x);
}

/// sigma^2(x) = beta (a - x) x (1 - x)
inline double wf_variance(const WfParams& wp, double x) {
  return wp.beta * (wp.a - x) * x * (1.0 - x);
}

/// Spatial Wright-Fisher diffusion with frequency-dependent migration on a deme graph.
class WfSpatialModel final : public SdeModel {
 public:
  WfSpatialModel(WfParams wp, DemeGraph g);

  std::size_t demes() const override { return graph_.size(); }
  std::size_t channels() const override { return 1; }
  std::vector<std::string> component_names() const override;
  Bounds bounds(std::size_t) const override { return kUnitInterval; }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;

 private:
  WfParams wp_;
  DemeGraph graph_;
};

/// D exchangeable demes coupled through the average of 1/(a - x_j).
class MeanfieldModel final : public SdeModel {
 public:
  MeanfieldModel(WfParams wp, std::size_t D);

  std::size_t demes() const override { return D_; }
  std::size_t channels() const override { return 1; }
  std::vector<std::string> component_names() const override;
  Bounds bounds(std::size_t) const override { return kUnitInterval; }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;
  void step(double t, std::span<double> x, std::span<const double> normals,
            const StepContext& ctx, StepWorkspace& ws) const override;

 private:
  WfParams wp_;
  std::size_t D_;
};

/// Returns the current estimate of E[1/(a - Z_t)] given time and particle states.
using MeanProvider = std::function<double(double t, std::span<const double> particles)>;

/// Particle realization of the McKean-Vlasov dynamics: every particle sees the
/// provider's estimate of E[1/(a - Z_t)]. The default provider is the particle average.
class McKeanVlasovModel final : public SdeModel {
 public:
  McKeanVlasovModel(WfParams wp, std::size_t particles, MeanProvider provider = {});

  std::size_t demes() const override { return D_; }
  std::size_t channels() const override { return 1; }
  std::vector<std::string> component_names() const override;
  Bounds bounds(std::size_t) const override { return kUnitInterval; }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;
  void step(double t, std::span<double> x, std::span<const double> normals,
            const StepContext& ctx, StepWorkspace& ws) const override;

 private:
  double estimate(double t, std::span<const double> x) const;

  WfParams wp_;
  std::size_t D_;
  MeanProvider provider_;
};

/// `copies` independent trajectories of the SDE with E[1/(a - Z)] frozen at theta.
class FrozenThetaModel final : public SdeModel {
 public:
  FrozenThetaModel(WfParams wp, double theta, std::size_t copies = 1);

  std::size_t demes() const override { return copies_; }
  std::size_t channels() const override { return 1; }
  std::vector<std::string> component_names() const override;
  Bounds bounds(std::size_t) const override { return kUnitInterval; }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;
  void step(double t, std::span<double> x, std::span<const double> normals,
            const StepContext& ctx, StepWorkspace& ws) const override;

  double theta() const noexcept { return theta_; }

 private:
  WfParams wp_;
  double theta_;
  std::size_t copies_;
};

/// Frequency in the single occupied deme of an invading colony; 0 is absorbing.
class SingleColonyModel final : public SdeModel {
 public:
  explicit SingleColonyModel(WfParams wp);

  std::size_t demes() const override { return 1; }
  std::size_t channels() const override { return 1; }
  std::vector<std::string> component_names() const override { return {"Y"}; }
  Bounds bounds(std::size_t) const override { return kUnitInterval; }
  void drift(double t, std::span<const double> x, std::span<double> out) const override;
  void diffusion(double t, std::span<const double> x, std::span<double> out) const override;

 private:
  WfParams wp_;
};

WfSpatialModel wf_spatial_model(const WfParams& wp, const DemeGraph& g);
MeanfieldModel meanfield_model(const WfParams& wp, std::size_t D);
McKeanVlasovModel mckean_vlasov_model(const WfParams& wp, std::size_t particles,
                                      MeanProvider provider = {});
/// Throws ThetaOutOfRange unless 1/a < theta < 1/(a-1).
FrozenThetaModel frozen_theta_model(const WfParams& wp, double theta, std::size_t copies = 1);
SingleColonyModel single_colony_model(const WfParams& wp);

/// L = max{beta a, kappa a^2, kappa + alpha, 1/(a-1)^2}.
double lipschitz_constant(const WfParams& wp);

/// Particle j of replica r starts at Uniform[lo, hi) drawn from the stream
/// (seed, r, j, kInitChannel), independent of the particle count.
InitialSampler uniform_initial(std::uint64_t seed, std::size_t particles, double lo, double hi);

}  // namespace altruism
