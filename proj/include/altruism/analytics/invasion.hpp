#pragma once

#include <string>

#include "altruism/limit/limit.hpp"
#include "altruism/model/params_io.hpp"

namespace altruism {

struct ScaleValues {
  double s = 1.0;  ///< scale density at z
  double S = 0.0;  ///< int_0^z s
};

/// s(z) = (1-z)^(-2 kappa/(a beta)) ((a-z)/a)^(-2 alpha/beta) and its integral.
/// Rejects z outside [0,1).
ScaleValues scale_function(const WfParams& wp, double z);

/// kappa a min(x,1) / (a - min(x,1)) + (x - 1)^+
double colonization_rate(const WfParams& wp, double x);

struct InvasionResult {
  double integral = 0.0;
  double excess = 0.0;  ///< integral - 1, computed without cancellation
  bool dies_out = false;
  WfParams wp;
};

/// e int_0^1 (1-y)^(e-1) ((a-y)/a)^(2 alpha/beta - 2) dy with e = 2 kappa/(a beta).
/// The total mass dies out iff the integral is at most 1.
InvasionResult invasion_criterion(const WfParams& wp);

/// Same integral evaluated directly, without subtracting the Beta part.
double invasion_integral_direct(const WfParams& wp);

/// {integral, dies_out, alpha, beta, kappa, a}
Json to_json(const InvasionResult& r);

}  // namespace altruism
