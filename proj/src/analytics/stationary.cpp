#include "altruism/analytics/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "altruism/errors.hpp"
#include "altruism/sde/path_io.hpp"
#include "altruism/sde/rng.hpp"

namespace altruism {

namespace {

/// a - z, computed from whichever of z, 1 - z is small.
double gap(double a, double z, double omz) { return z < 0.5 ? a - z : (a - 1.0) + omz; }

void check_theta(const WfParams& wp, double theta) {
  if (!(theta > 1.0 / wp.a && theta < 1.0 / (wp.a - 1.0))) {
    throw ThetaOutOfRange("theta must lie strictly between 1/a and 1/(a-1)");
  }
}

struct Exponents {
  double u;
  double v;
};

Exponents exponents(const WfParams& wp, double theta) {
  wp.validate();
  if (!(wp.kappa > 0.0) || !(wp.beta > 0.0)) {
    throw InvalidParameters("stationary law needs kappa > 0 and beta > 0");
  }
  check_theta(wp, theta);
  const double r = 2.0 * wp.kappa / wp.beta;
  return {r * (wp.a * theta - 1.0), r * (1.0 - theta * (wp.a - 1.0))};
}

double beta_scale(double u, double v) { return std::max(1.0, 1.0 / u + 1.0 / v); }

}  // namespace

double log_beta(double x, double y) { return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y); }

StationaryModel make_stationary_model(const WfParams& wp, double theta) {
  const auto [u, v] = exponents(wp, theta);
  StationaryModel sm{wp, theta, u, v, 0.0};
  const double e = sm.gap_exponent();
  sm.c_theta = integrate_beta_weighted(
                   u, v, [&](double z, double omz) { return std::pow(gap(wp.a, z, omz), e); },
                   1e-10 * beta_scale(u, v))
                   .value;
  return sm;
}

double speed_density(const StationaryModel& sm, double z) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("speed density is evaluated on (0,1) only");
  const double log_m = (sm.u - 1.0) * std::log(z) + (sm.v - 1.0) * std::log1p(-z) +
                       sm.gap_exponent() * std::log(sm.wp.a - z);
  return std::exp(log_m);
}

double stationary_moment(const StationaryModel& sm, const EndpointFunction& f) {
  const double e = sm.gap_exponent();
  const double a = sm.wp.a;
  const auto num = integrate_beta_weighted(
      sm.u, sm.v, [&](double z, double omz) { return f(z, omz) * std::pow(gap(a, z, omz), e); },
      0.5e-10 * sm.c_theta);
  return num.value / sm.c_theta;
}

double stationary_moment(const StationaryModel& sm, const std::function<double(double)>& f) {
  return stationary_moment(sm, EndpointFunction([&](double z, double) { return f(z); }));
}

double gamma_identity_residual(const WfParams& wp, double theta) {
  const auto [u, v] = exponents(wp, theta);
  // (a - z)(1/(a - z) - theta) = (1 - a theta) + theta z
  const double c0 = 1.0 - wp.a * theta;
  return integrate_beta_weighted(
             u, v, [&](double z, double) { return c0 + theta * z; }, 1e-10)
      .value;
}

double gamma_identity_closed_form(const WfParams& wp, double theta) {
  const auto [u, v] = exponents(wp, theta);
  return std::exp(log_beta(u, v)) * (1.0 - wp.a * theta) + theta * std::exp(log_beta(u + 1.0, v));
}

double speed_normalizer_closed_form(const StationaryModel& sm) {
  const double e = sm.gap_exponent();
  const double k = std::round(e);
  if (std::abs(e - k) > 1e-12 || k < 0.0) {
    throw DomainError("closed-form normalizer needs a nonnegative integer exponent on (a - z)");
  }
  const int n = static_cast<int>(k);
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * std::pow(sm.wp.a, n - j) * std::exp(log_beta(sm.u + j, sm.v));
    binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  return sum;
}

std::string to_string(FixationOutcome o) {
  switch (o) {
    case FixationOutcome::AllZero: return "AllZero";
    case FixationOutcome::AllOne: return "AllOne";
    case FixationOutcome::ConvergesTo0: return "ConvergesTo0";
    case FixationOutcome::ConvergesTo1: return "ConvergesTo1";
    case FixationOutcome::StationaryDensity: return "StationaryDensity";
  }
  return "?";
}

FixationClass fixation_classify(const WfParams& wp, double meanZ0, std::optional<double> theta) {
  wp.validate();
  if (!(meanZ0 >= 0.0 && meanZ0 <= 1.0)) throw DomainError("E[Z_0] must lie in [0,1]");
  if (meanZ0 == 1.0) return {FixationOutcome::AllOne, std::nullopt};
  if (meanZ0 == 0.0) return {FixationOutcome::AllZero, std::nullopt};
  if (wp.alpha > wp.beta) return {FixationOutcome::ConvergesTo0, std::nullopt};
  if (wp.alpha < wp.beta) return {FixationOutcome::ConvergesTo1, std::nullopt};
  if (!theta) throw ConfigError("alpha == beta: theta = E[1/(a - Z_0)] must be supplied");
  return {FixationOutcome::StationaryDensity, make_stationary_model(wp, *theta)};
}

double CdfTable::eval(double x) const {
  if (x <= z.front()) return 0.0;
  if (x >= z.back()) return 1.0;
  const auto it = std::upper_bound(z.begin(), z.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - z.begin());
  const double w = (x - z[k - 1]) / (z[k] - z[k - 1]);
  return cdf[k - 1] + w * (cdf[k] - cdf[k - 1]);
}

double CdfTable::inverse(double p) const {
  if (p <= 0.0) return z.front();
  if (p >= 1.0) return z.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), p);
  const std::size_t k = static_cast<std::size_t>(it - cdf.begin());
  const double span = cdf[k] - cdf[k - 1];
  const double w = span > 0.0 ? (p - cdf[k - 1]) / span : 0.0;
  return z[k - 1] + w * (z[k] - z[k - 1]);
}

CdfTable stationary_cdf_table(const StationaryModel& sm, std::size_t points) {
  if (points < 3) throw InvalidSize("CDF table needs at least 3 points");
  CdfTable t;
  t.z.resize(points);
  const double step = std::numbers::pi / (2.0 * static_cast<double>(points - 1));
  for (std::size_t k = 0; k < points; ++k) {
    const double s = std::sin(step * static_cast<double>(k));
    t.z[k] = s * s;
  }
  t.z.front() = 0.0;
  t.z.back() = 1.0;

  const double e = sm.gap_exponent();
  const double a = sm.wp.a;
  const double tol = 1e-12 * sm.c_theta;
  std::vector<double> mass(points - 1);
  // Endpoint cells carry the integrable singularities.
  mass.front() = integrate_power_left(
                     sm.u, t.z[1],
                     [&](double z, double omz) {
                       return std::pow(omz, sm.v - 1.0) * std::pow(gap(a, z, omz), e);
                     },
                     tol)
                     .value;
  const double w_last = 1.0 - t.z[points - 2];
  mass.back() = integrate_power_left(
                    sm.v, w_last,
                    [&](double w, double omw) {
                      return std::pow(omw, sm.u - 1.0) * std::pow(gap(a, omw, w), e);
                    },
                    tol)
                    .value;
  for (std::size_t k = 1; k + 1 < points - 1; ++k) {
    mass[k] = boost::math::quadrature::gauss<double, 10>::integrate(
        [&](double z) { return speed_density(sm, z); }, t.z[k], t.z[k + 1]);
  }
  t.cdf.resize(points);
  t.cdf[0] = 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < points; ++k) {
    acc += mass[k];
    t.cdf[k + 1] = acc;
  }
  for (double& c : t.cdf) c /= acc;
  t.cdf.back() = 1.0;
  return t;
}

std::vector<double> sample_from_table(const CdfTable& table, std::size_t n, std::uint64_t seed) {
  std::vector<double> out(n);
  RngStream rng(seed, StreamId{0, 0, 0});
  for (auto& x : out) x = table.inverse(rng.uniform());
  return out;
}

std::vector<double> sample_stationary(const StationaryModel& sm, std::size_t n, std::uint64_t seed) {
  check_theta(sm.wp, sm.theta);
  if (n == 0) return {};
  return sample_from_table(stationary_cdf_table(sm), n, seed);
}

std::string density_table_csv(const StationaryModel& sm, const CdfTable& table) {
  std::ostringstream out;
  out << "z,m_theta,cdf\n";
  for (std::size_t k = 0; k < table.z.size(); ++k) {
    const double z = table.z[k];
    double m;
    if (z > 0.0 && z < 1.0) {
      m = speed_density(sm, z);
    } else {
      m = std::pow(z, sm.u - 1.0) * std::pow(1.0 - z, sm.v - 1.0) *
          std::pow(sm.wp.a - z, sm.gap_exponent());
    }
    out << format_double(z) << ',' << format_double(m) << ',' << format_double(table.cdf[k]) << '\n';
  }
  return out.str();
}

}  // namespace altruism
