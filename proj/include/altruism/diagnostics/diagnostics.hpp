#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "altruism/analytics/stationary.hpp"
#include "altruism/limit/limit.hpp"
#include "altruism/model/graph.hpp"
#include "altruism/model/params.hpp"
#include "altruism/model/params_io.hpp"
#include "altruism/sde/integrator.hpp"

namespace altruism {

/// u(x,y,z) = (eta - rho z)(x - h - h ln(x/h)) + delta (y - p - p ln(y/p)),
/// (h, p) the equilibrium at z. Throws DomainError unless x > 0 and y > 0.
double lyapunov_value(const EcologyParams& p, const LimitConstants& lc, double x, double y,
                      double z);

/// (eta - rho z)(lambda/K)(x - h)^2 + delta gamma (y - p)^2: the rate at which u decays
/// along the noise-free, migration-free single-deme flow at frozen z.
double lyapunov_dissipation(const EcologyParams& p, const LimitConstants& lc, double x, double y,
                            double z);

struct DeviationSeries {
  std::vector<double> times;  ///< slow time
  std::vector<double> h_dev;  ///< sum_i sigma_i (H_i - h(F_i))^2
  std::vector<double> p_dev;  ///< sum_i sigma_i (P_i - p(F_i))^2
  std::vector<double> h_integral;
  std::vector<double> p_integral;
  double N = 1.0;

  /// N * (h_integral + p_integral) at the k-th record
  double scaled_total(std::size_t k) const { return N * (h_integral[k] + p_integral[k]); }
};

/// Weighted squared distance to the equilibrium manifold along an HFP path, with
/// trapezoidal running integrals. `demes` selects a subset; empty means all.
/// Throws ShapeMismatch if the path does not hold 3 * |graph| components.
DeviationSeries deviation_statistic(const Path& path, const EcologyParams& p,
                                    const LimitConstants& lc, const DemeGraph& g, double N,
                                    std::span<const std::size_t> demes = {});

struct MeanSeries {
  std::vector<double> times;
  std::vector<double> value;
  std::vector<double> stderr_;
};

/// Replica average of N-scaled deviation integrals, with Monte Carlo standard errors.
MeanSeries deviation_ensemble(std::span<const DeviationSeries> runs);

enum class MonitorKind { combined_p4, inv_H2, P_over_H2, inv_P, inv_PH };

std::string to_string(MonitorKind k);
MonitorKind parse_monitor_kind(const std::string& s);

/// t -> sum_i sigma_i g(H_i, P_i) on an HFP path. Inverse monitors throw DomainError
/// on nonpositive H or P.
std::vector<double> moment_monitor(const Path& path, const EcologyParams& p, const DemeGraph& g,
                                   MonitorKind which);

/// Particle average of 1/(a - Z) along a limit path, one value per record.
std::vector<double> inverse_gap_series(const Path& path, double a);

enum class Trend { NonIncreasing, NonDecreasing, Constant };

std::string to_string(Trend t);

struct MonotoneVerdict {
  Trend verdict = Trend::Constant;
  Trend expected = Trend::Constant;
  double slope_mean = 0.0;
  double slope_stderr = 0.0;
  bool consistent = false;
};

/// Fits a least-squares slope to each replica's series and compares the mean slope
/// against a 3-stderr band. Throws InsufficientReplicas for fewer than two replicas,
/// or when alpha != beta and the band cannot resolve the trend.
MonotoneVerdict monotone_moment_check(std::span<const double> times,
                                      const std::vector<std::vector<double>>& series,
                                      const WfParams& wp);

/// sup |F_n - F| between the empirical CDF of the samples and the table. Throws EmptySample.
double ks_distance(std::span<const double> samples, const CdfTable& table);

/// sup |F_n - G_m| between two empirical CDFs.
double ks_two_sample(std::span<const double> x, std::span<const double> y);

/// Header `t,value,stderr`; stderr may be empty (written as 0).
std::string series_csv(std::span<const double> times, std::span<const double> value,
                       std::span<const double> stderr_ = {});

Json to_json(const MonotoneVerdict& v);

}  // namespace altruism
