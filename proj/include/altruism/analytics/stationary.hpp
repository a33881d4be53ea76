#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altruism/analytics/quadrature.hpp"
#include "altruism/limit/limit.hpp"

namespace altruism {

/// Stationary law of the frozen-theta SDE:
///   m(z) = z^(u-1) (1-z)^(v-1) (a-z)^(2 alpha/beta - 1),  Psi_theta = m / c_theta.
struct StationaryModel {
  WfParams wp;
  double theta = 0.0;
  double u = 0.0;  ///< (2 kappa / beta)(a theta - 1)
  double v = 0.0;  ///< (2 kappa / beta)(1 - theta (a - 1))
  double c_theta = 0.0;

  double gap_exponent() const { return 2.0 * wp.alpha / wp.beta - 1.0; }
};

/// Throws ThetaOutOfRange unless 1/a < theta < 1/(a-1); computes c_theta by quadrature.
StationaryModel make_stationary_model(const WfParams& wp, double theta);

/// Unnormalized speed density at z in (0,1), evaluated in log space.
double speed_density(const StationaryModel& sm, double z);

/// int f dPsi_theta; f receives (z, 1 - z). Absolute tolerance 1e-10.
double stationary_moment(const StationaryModel& sm, const EndpointFunction& f);
double stationary_moment(const StationaryModel& sm, const std::function<double(double)>& f);

/// Quadrature of int_0^1 z^(u-1)(1-z)^(v-1)(a-z)(1/(a-z) - theta) dz; identically zero in theory.
double gamma_identity_residual(const WfParams& wp, double theta);

/// The same integral through log-Gamma: B(u,v)(1 - a theta) + theta B(u+1, v).
double gamma_identity_closed_form(const WfParams& wp, double theta);

/// c_theta through log-Gamma, valid when 2 alpha/beta - 1 is a nonnegative integer
/// (binomial expansion of (a-z)^k). Throws DomainError otherwise.
double speed_normalizer_closed_form(const StationaryModel& sm);

/// log B(x, y)
double log_beta(double x, double y);

enum class FixationOutcome { AllZero, AllOne, ConvergesTo0, ConvergesTo1, StationaryDensity };

std::string to_string(FixationOutcome o);

struct FixationClass {
  FixationOutcome outcome = FixationOutcome::AllZero;
  std::optional<StationaryModel> stationary;  ///< set for StationaryDensity
};

/// Long-time behaviour predicted from E[Z_0] and the sign of alpha - beta. For
/// alpha == beta with 0 < meanZ0 < 1, theta = E[1/(a - Z_0)] is required.
FixationClass fixation_classify(const WfParams& wp, double meanZ0,
                                std::optional<double> theta = std::nullopt);

/// Tabulated CDF of Psi_theta on z_k = sin^2(pi k / (2 (n-1))), linear in between.
struct CdfTable {
  std::vector<double> z;
  std::vector<double> cdf;

  double eval(double x) const;
  double inverse(double p) const;
};

CdfTable stationary_cdf_table(const StationaryModel& sm, std::size_t points = 10000);

/// Inverse-CDF samples from the tabulated Psi_theta.
std::vector<double> sample_stationary(const StationaryModel& sm, std::size_t n, std::uint64_t seed);
std::vector<double> sample_from_table(const CdfTable& table, std::size_t n, std::uint64_t seed);

/// Header `z,m_theta,cdf`.
std::string density_table_csv(const StationaryModel& sm, const CdfTable& table);

}  // namespace altruism
