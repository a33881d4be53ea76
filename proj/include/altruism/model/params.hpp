#pragma once

#include <string>
#include <vector>

namespace altruism {

/// The seven Lotka-Volterra rates of the host/parasite system.
struct EcologyParams {
  double lambda = 0.0;  ///< host growth rate
  double K = 0.0;       ///< host carrying capacity
  double delta = 0.0;   ///< predation pressure per parasite
  double nu = 0.0;      ///< parasite death rate
  double gamma = 0.0;   ///< parasite self-competition
  double eta = 0.0;     ///< parasite growth per cheater host
  double rho = 0.0;     ///< reduction of parasite growth per altruist host
};

/// Rates at system-size index N. All nonnegative.
struct ScalingParams {
  double N = 1.0;
  double kappa_H = 0.0;
  double kappa_P = 0.0;
  double alpha = 0.0;
  double beta_H = 0.0;
  double beta_P = 0.0;
  double iota_H = 0.0;
  double iota_P = 0.0;
};

/// a = (lambda*gamma + delta*K*eta) / (delta*K*rho), b = delta*rho / (delta*nu + lambda*gamma).
struct LimitConstants {
  double a = 0.0;
  double b = 0.0;
};

/// Throws InvalidParameters unless every rate is positive and rho < eta, and
/// DegenerateEquilibrium when K(eta - rho) <= nu.
void validate(const EcologyParams& p);
void validate(const ScalingParams& sp);

LimitConstants derive_limit_constants(const EcologyParams& p);

struct EquilibriumPair {
  double h = 0.0;
  double p = 0.0;
};

/// (h_inf(x), p_inf(x)) in the a,b form used by the simulators.
EquilibriumPair equilibrium_pair(const EcologyParams& p, const LimitConstants& lc, double x);

/// Same pair evaluated through the rational-in-rates form. Used as a cross-check.
EquilibriumPair equilibrium_pair_rational(const EcologyParams& p, double x);

struct EquilibriumDerivatives {
  double h1 = 0.0;
  double h2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

EquilibriumDerivatives equilibrium_derivatives(const LimitConstants& lc, const EcologyParams& p,
                                               double x);

struct AssumptionCheck {
  std::string name;
  bool passed = false;
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  bool overall = false;
  std::string unchecked = "moment conditions on initial data: not checkable here";

  bool passed(const std::string& name) const;
};

/// Evaluates every parameter-only inequality of the standing assumptions.
AssumptionReport check_assumptions(const EcologyParams& p, const ScalingParams& sp);

}  // namespace altruism
