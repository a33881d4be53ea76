#include "altruism/model/params.hpp"

#include <algorithm>
#include <cmath>

#include "altruism/errors.hpp"

namespace altruism {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParameters(std::string("ecology parameter ") + name + " must be positive and finite");
  }
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw InvalidParameters(std::string("scaling parameter ") + name + " must be nonnegative and finite");
  }
}

}  // namespace

void validate(const EcologyParams& p) {
  require_positive(p.lambda, "lambda");
  require_positive(p.K, "K");
  require_positive(p.delta, "delta");
  require_positive(p.nu, "nu");
  require_positive(p.gamma, "gamma");
  require_positive(p.eta, "eta");
  require_positive(p.rho, "rho");
  if (!(p.rho < p.eta)) throw InvalidParameters("rho must be smaller than eta");
  if (!(p.K * (p.eta - p.rho) > p.nu)) {
    throw DegenerateEquilibrium("K(eta - rho) <= nu: parasite equilibrium vanishes on [0,1]");
  }
}

void validate(const ScalingParams& sp) {
  if (!(sp.N >= 1.0)) throw InvalidParameters("scaling parameter N must be >= 1");
  require_nonnegative(sp.kappa_H, "kappa_H");
  require_nonnegative(sp.kappa_P, "kappa_P");
  require_nonnegative(sp.alpha, "alpha");
  require_nonnegative(sp.beta_H, "beta_H");
  require_nonnegative(sp.beta_P, "beta_P");
  require_nonnegative(sp.iota_H, "iota_H");
  require_nonnegative(sp.iota_P, "iota_P");
}

LimitConstants derive_limit_constants(const EcologyParams& p) {
  validate(p);
  LimitConstants lc;
  lc.a = (p.lambda * p.gamma + p.delta * p.K * p.eta) / (p.delta * p.K * p.rho);
  lc.b = p.delta * p.rho / (p.delta * p.nu + p.lambda * p.gamma);
  // Algebraically equivalent to K(eta - rho) > nu; kept as a guard against rounding at the boundary.
  if (!(p.K * lc.b * (lc.a - 1.0) > 1.0)) {
    throw DegenerateEquilibrium("K b (a - 1) <= 1");
  }
  return lc;
}

EquilibriumPair equilibrium_pair(const EcologyParams& p, const LimitConstants& lc, double x) {
  const double gap = lc.a - x;
  return {1.0 / (lc.b * gap), (p.lambda / p.delta) * (1.0 - 1.0 / (p.K * lc.b * gap))};
}

EquilibriumPair equilibrium_pair_rational(const EcologyParams& p, double x) {
  const double eff = p.eta - p.rho * x;
  const double den = p.lambda * p.gamma + p.delta * p.K * eff;
  return {p.K * (p.delta * p.nu + p.gamma * p.lambda) / den,
          (p.lambda * p.K * eff - p.lambda * p.nu) / den};
}

EquilibriumDerivatives equilibrium_derivatives(const LimitConstants& lc, const EcologyParams& p,
                                               double x) {
  const double g = lc.a - x;
  const double g2 = g * g;
  const double g3 = g2 * g;
  const double scale = p.lambda / (p.delta * p.K * lc.b);
  return {1.0 / (lc.b * g2), 2.0 / (lc.b * g3), -scale / g2, -2.0 * scale / g3};
}

bool AssumptionReport::passed(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const AssumptionCheck& c) { return c.name == name; });
  if (it == checks.end()) throw ConfigError("unknown assumption check: " + name);
  return it->passed;
}

AssumptionReport check_assumptions(const EcologyParams& p, const ScalingParams& sp) {
  AssumptionReport r;
  auto add = [&](std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); };
  add("lambda>nu", p.lambda > p.nu);
  add("eta-rho>lambda/K", p.eta - p.rho > p.lambda / p.K);
  add("gamma>=2delta", p.gamma >= 2.0 * p.delta);
  add("alpha+kappa_H<=lambda/4", sp.alpha + sp.kappa_H <= p.lambda / 4.0);
  add("iota_P<=lambda(nu+lambda)/(8delta)",
      sp.iota_P <= p.lambda * (p.nu + p.lambda) / (8.0 * p.delta));
  add("kappa_P+kappa_H+alpha<=(lambda-nu)/2",
      sp.kappa_P + sp.kappa_H + sp.alpha <= (p.lambda - p.nu) / 2.0);
  add("iota_H>=4delta*kappa_P/(3(nu+lambda))+3/2*beta_H",
      sp.iota_H >= 4.0 * p.delta * sp.kappa_P / (3.0 * (p.nu + p.lambda)) + 1.5 * sp.beta_H);
  add("iota_P>=beta_P", sp.iota_P >= sp.beta_P);
  r.overall = std::all_of(r.checks.begin(), r.checks.end(),
                          [](const AssumptionCheck& c) { return c.passed; });
  return r;
}

}  // namespace altruism
