#pragma once

#include <functional>

namespace altruism {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
};

/// Integrand evaluated at z together with 1 - z, so factors like (1 - z)^q keep
/// full relative precision near z = 1.
using EndpointFunction = std::function<double(double z, double one_minus_z)>;

/// Adaptive 15-point Gauss-Kronrod on [lo, hi]. Throws QuadratureFailure when the
/// error estimate exceeds abs_tol.
QuadratureResult integrate_smooth(const std::function<double(double)>& f, double lo, double hi,
                                  double abs_tol);

/// Double-exponential (tanh-sinh) rule, robust to integrable endpoint singularities
/// of f and its derivatives. Throws QuadratureFailure like integrate_smooth.
QuadratureResult integrate_endpoint(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol);

/// int_0^h z^(p-1) g(z) dz for p > 0, 0 < h <= 1 and bounded g. For p < 1 the
/// substitution z = h s^(1/p) turns the weight into the constant h^p / p.
QuadratureResult integrate_power_left(double p, double h, const EndpointFunction& g,
                                      double abs_tol);

/// int_0^1 z^(p-1) (1-z)^(q-1) g(z) dz for p, q > 0 and bounded g; splits at 1/2
/// and removes each endpoint singularity with integrate_power_left.
QuadratureResult integrate_beta_weighted(double p, double q, const EndpointFunction& g,
                                         double abs_tol);

}  // namespace altruism
