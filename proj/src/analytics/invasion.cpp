#include "altruism/analytics/invasion.hpp"

#include <algorithm>
#include <cmath>

#include "altruism/analytics/quadrature.hpp"
#include "altruism/errors.hpp"

namespace altruism {

namespace {

void require_positive_rates(const WfParams& wp) {
  wp.validate();
  if (!(wp.kappa > 0.0) || !(wp.beta > 0.0)) {
    throw InvalidParameters("scale function needs kappa > 0 and beta > 0");
  }
}

double scale_density(const WfParams& wp, double z) {
  const double e1 = 2.0 * wp.kappa / (wp.a * wp.beta);
  const double e2 = 2.0 * wp.alpha / wp.beta;
  return std::exp(-e1 * std::log1p(-z) - e2 * std::log1p(-z / wp.a));
}

}  // namespace

ScaleValues scale_function(const WfParams& wp, double z) {
  require_positive_rates(wp);
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("scale function is defined on [0,1)");
  ScaleValues out;
  out.s = scale_density(wp, z);
  if (z > 0.0) {
    out.S = integrate_smooth([&](double x) { return scale_density(wp, x); }, 0.0, z,
                             1e-10 * std::max(1.0, z * out.s))
                .value;
  }
  // s is increasing, so S(z) <= z s(z); allow quadrature rounding.
  if (out.S > z * out.s * (1.0 + 1e-12)) {
    throw NumericalError("integrated scale exceeds z s(z)");
  }
  return out;
}

double colonization_rate(const WfParams& wp, double x) {
  wp.validate();
  if (!(x >= 0.0)) throw DomainError("colonization rate needs x >= 0");
  const double m = std::min(x, 1.0);
  return wp.kappa * wp.a * m / (wp.a - m) + std::max(x - 1.0, 0.0);
}

InvasionResult invasion_criterion(const WfParams& wp) {
  require_positive_rates(wp);
  const double e1 = 2.0 * wp.kappa / (wp.a * wp.beta);
  const double c = 2.0 * wp.alpha / wp.beta - 2.0;
  // With w = 1 - y the weight is w^(e1-1); e1 * int w^(e1-1) = 1 exactly.
  const auto q = integrate_power_left(
      e1, 1.0,
      [&](double, double y) { return std::expm1(c * std::log1p(-y / wp.a)); }, 1e-10 / e1);
  InvasionResult r;
  r.wp = wp;
  r.excess = e1 * q.value;
  r.integral = 1.0 + r.excess;
  r.dies_out = r.excess <= 0.0;
  return r;
}

double invasion_integral_direct(const WfParams& wp) {
  require_positive_rates(wp);
  const double e1 = 2.0 * wp.kappa / (wp.a * wp.beta);
  const double c = 2.0 * wp.alpha / wp.beta - 2.0;
  return e1 * integrate_beta_weighted(
                  1.0, e1,
                  [&](double y, double omy) {
                    const double gap = y < 0.5 ? wp.a - y : (wp.a - 1.0) + omy;
                    return std::pow(gap / wp.a, c);
                  },
                  1e-10 / e1)
                  .value;
}

Json to_json(const InvasionResult& r) {
  return Json{{"integral", r.integral}, {"dies_out", r.dies_out}, {"alpha", r.wp.alpha},
              {"beta", r.wp.beta},      {"kappa", r.wp.kappa},      {"a", r.wp.a}};
}

}  // namespace altruism
