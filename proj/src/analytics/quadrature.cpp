#include "altruism/analytics/quadrature.hpp"

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "altruism/errors.hpp"

namespace altruism {

namespace {

constexpr unsigned kMaxDepth = 15;
constexpr double kRelTol = 1e-14;

}  // namespace

QuadratureResult integrate_smooth(const std::function<double(double)>& f, double lo, double hi,
                                  double abs_tol) {
  QuadratureResult r;
  double l1 = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, kMaxDepth,
                                                                         kRelTol, &r.error, &l1);
  if (!std::isfinite(r.value) || r.error > abs_tol) {
    throw QuadratureFailure("quadrature on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] missed tolerance: error estimate " + std::to_string(r.error));
  }
  return r;
}

QuadratureResult integrate_endpoint(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol) {
  thread_local boost::math::quadrature::tanh_sinh<double> ts(kMaxDepth);
  QuadratureResult r;
  double l1 = 0.0;
  r.value = ts.integrate([&f](double x) { return f(x); }, lo, hi, kRelTol, &r.error, &l1);
  if (!std::isfinite(r.value) || r.error > abs_tol) {
    throw QuadratureFailure("endpoint quadrature on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] missed tolerance: error estimate " +
                            std::to_string(r.error));
  }
  return r;
}

QuadratureResult integrate_power_left(double p, double h, const EndpointFunction& g,
                                      double abs_tol) {
  if (!(p > 0.0) || !(h > 0.0 && h <= 1.0)) throw DomainError("power weight needs p > 0, h in (0,1]");
  if (p >= 1.0) {
    return integrate_endpoint(
        [&](double z) { return std::pow(z, p - 1.0) * g(z, 1.0 - z); }, 0.0, h, abs_tol);
  }
  const double scale = std::pow(h, p) / p;
  const double inv_p = 1.0 / p;
  QuadratureResult inner = integrate_endpoint(
      [&](double s) {
        const double z = h * std::pow(s, inv_p);
        return g(z, 1.0 - z);
      },
      0.0, 1.0, abs_tol / scale);
  return {scale * inner.value, scale * inner.error};
}

QuadratureResult integrate_beta_weighted(double p, double q, const EndpointFunction& g,
                                         double abs_tol) {
  if (!(p > 0.0) || !(q > 0.0)) throw DomainError("beta weight needs p, q > 0");
  const QuadratureResult left = integrate_power_left(
      p, 0.5, [&](double z, double omz) { return std::pow(omz, q - 1.0) * g(z, omz); },
      0.5 * abs_tol);
  // Mirror: w = 1 - z, so the integrand sees (1 - w, w).
  const QuadratureResult right = integrate_power_left(
      q, 0.5, [&](double w, double omw) { return std::pow(omw, p - 1.0) * g(omw, w); },
      0.5 * abs_tol);
  return {left.value + right.value, left.error + right.error};
}

}  // namespace altruism
