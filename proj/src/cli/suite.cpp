#include "altruism/cli/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "altruism/analytics/invasion.hpp"
#include "altruism/analytics/stationary.hpp"
#include "altruism/diagnostics/diagnostics.hpp"
#include "altruism/errors.hpp"
#include "altruism/limit/coupling.hpp"
#include "altruism/limit/limit.hpp"
#include "altruism/micro/micro.hpp"
#include "altruism/sde/ensemble.hpp"
#include "altruism/sde/rng.hpp"

namespace altruism {

namespace {

constexpr std::uint64_t kSuiteSeed = 20240611;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::size_t scaled_replicas(std::size_t r, const SuiteOptions& opt) {
  return opt.fast ? std::max<std::size_t>(1, r / 10) : r;
}

double tol_scale(const SuiteOptions& opt) { return opt.fast ? 2.0 : 1.0; }

EcologyParams pset() { return {2.0, 4.0, 1.0, 1.0, 2.0, 2.0, 1.0}; }

EcologyParams random_ecology(RngStream& rng) {
  for (;;) {
    EcologyParams p;
    p.lambda = rng.uniform(1.0, 4.0);
    p.K = rng.uniform(1.0, 10.0);
    p.delta = rng.uniform(0.5, 2.0);
    p.nu = rng.uniform(0.1, 0.9 * p.lambda);
    p.gamma = rng.uniform(0.5, 4.0);
    p.eta = rng.uniform(0.5, 4.0);
    p.rho = rng.uniform(0.05, 0.95) * p.eta;
    try {
      derive_limit_constants(p);
      return p;
    } catch (const ConfigError&) {
    }
  }
}

WfParams random_wf(RngStream& rng) {
  WfParams wp;
  wp.kappa = rng.uniform(0.5, 2.0);
  wp.beta = rng.uniform(0.5, 2.0);
  wp.alpha = rng.uniform(0.5, 2.0);
  wp.a = rng.uniform(1.5, 4.0);
  return wp;
}

double theta_grid(const WfParams& wp, std::size_t k, std::size_t n) {
  const double lo = 1.0 / wp.a;
  const double hi = 1.0 / (wp.a - 1.0);
  return lo + static_cast<double>(k + 1) / static_cast<double>(n + 1) * (hi - lo);
}

CriterionResult equilibrium_identities(const SuiteOptions&) {
  RngStream rng(kSuiteSeed, {1, 0, 0});
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const EcologyParams p = random_ecology(rng);
    const LimitConstants lc = derive_limit_constants(p);
    for (int k = 0; k <= 100; ++k) {
      const double x = k / 100.0;
      const auto eq = equilibrium_pair(p, lc, x);
      worst = std::max(worst, std::abs(p.delta * eq.p + (p.lambda / p.K) * eq.h - p.lambda));
      worst = std::max(worst, std::abs(p.nu + p.gamma * eq.p - (p.eta - p.rho * x) * eq.h));
    }
  }
  return {1, "equilibrium identities", worst < 1e-12, "max residual " + fmt("%.2e", worst), 0};
}

/// Noise-free, migration-free single-deme trajectories at frozen F.
std::vector<Path> attractor_paths() {
  const EcologyParams p = pset();
  ScalingParams sp;
  sp.kappa_H = sp.kappa_P = sp.alpha = sp.beta_H = sp.beta_P = sp.iota_H = sp.iota_P = 0.0;
  const HfpModel model = hfp_model(p, sp, build_deme_graph({GraphKind::single, 1}));
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 200.0;
  std::vector<Path> out;
  for (double F : {0.0, 0.5, 1.0}) {
    const std::vector<double> x0{0.5, F, 2.0};
    out.push_back(integrate(model, x0, cfg, kSuiteSeed, 0));
  }
  return out;
}

CriterionResult lotka_volterra_attractor(const SuiteOptions&) {
  const EcologyParams p = pset();
  const LimitConstants lc = derive_limit_constants(p);
  double worst = 0.0;
  for (const Path& path : attractor_paths()) {
    const std::size_t k = path.size() - 1;
    const auto eq = equilibrium_pair(p, lc, path.at(k, 1));
    worst = std::max({worst, std::abs(path.at(k, 0) - eq.h), std::abs(path.at(k, 2) - eq.p)});
  }
  return {2, "deterministic attractor", worst < 1e-6, "max distance at t=200 " + fmt("%.2e", worst), 0};
}

CriterionResult lyapunov_dissipation_check(const SuiteOptions&) {
  const EcologyParams p = pset();
  const LimitConstants lc = derive_limit_constants(p);
  double max_increase = -INFINITY;
  double max_rel = 0.0;
  std::size_t compared = 0;
  for (const Path& path : attractor_paths()) {
    const double dt = path.times[1] - path.times[0];
    double u_prev = lyapunov_value(p, lc, path.at(0, 0), path.at(0, 2), path.at(0, 1));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const double H = path.at(k, 0);
      const double F = path.at(k, 1);
      const double P = path.at(k, 2);
      const double u_next = lyapunov_value(p, lc, path.at(k + 1, 0), path.at(k + 1, 2), F);
      max_increase = std::max(max_increase, u_next - u_prev);
      if (path.times[k] >= 1.0 && u_prev > 1e-10) {
        const double rate = lyapunov_dissipation(p, lc, H, P, F);
        max_rel = std::max(max_rel, std::abs((u_prev - u_next) - dt * rate) / (dt * rate));
        ++compared;
      }
      u_prev = u_next;
    }
  }
  const bool ok = max_increase <= 1e-9 && max_rel < 0.01 && compared > 0;
  return {3, "Lyapunov dissipation", ok,
          "max step increase " + fmt("%.2e", max_increase) + ", max rate mismatch " +
              fmt("%.3f%%", 100.0 * max_rel) + " over " + std::to_string(compared) + " steps",
          0};
}

CriterionResult gamma_identity(const SuiteOptions&) {
  RngStream rng(kSuiteSeed, {4, 0, 0});
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const WfParams wp = random_wf(rng);
    for (std::size_t k = 0; k < 50; ++k) {
      worst = std::max(worst, std::abs(gamma_identity_residual(wp, theta_grid(wp, k, 50))));
    }
  }
  const WfParams anchor{1.0, 1.0, 1.0, 2.0};
  const double r = gamma_identity_residual(anchor, 0.75);
  const double oracle = 2.0 - 0.75 * (8.0 / 3.0);
  const bool ok = worst < 1e-10 && std::abs(r - oracle) < 1e-10;
  return {4, "Gamma identity", ok,
          "max |residual| " + fmt("%.2e", worst) + ", anchor " + fmt("%.2e", r), 0};
}

CriterionResult trichotomy(const SuiteOptions&) {
  RngStream rng(kSuiteSeed, {5, 0, 0});
  int sign_failures = 0;
  for (int s = 0; s < 200; ++s) {
    WfParams wp = random_wf(rng);
    double ratio;
    do {
      ratio = std::exp(rng.uniform(-1.5, 1.5));
    } while (std::abs(ratio - 1.0) < 0.05);
    wp.alpha = wp.beta * ratio;
    const double theta = theta_grid(wp, static_cast<std::size_t>(rng.uniform(0.0, 40.0)) + 5, 50);
    const StationaryModel sm = make_stationary_model(wp, theta);
    const double m = stationary_moment(sm, [a = wp.a](double z) { return 1.0 / (a - z); });
    const double expected = wp.beta > wp.alpha ? 1.0 : -1.0;
    if ((m - theta) * expected <= 0.0) ++sign_failures;
  }
  double worst_equal = 0.0;
  for (int s = 0; s < 20; ++s) {
    WfParams wp = random_wf(rng);
    wp.alpha = wp.beta;
    const double theta = theta_grid(wp, static_cast<std::size_t>(rng.uniform(0.0, 50.0)), 50);
    const StationaryModel sm = make_stationary_model(wp, theta);
    const double m = stationary_moment(sm, [a = wp.a](double z) { return 1.0 / (a - z); });
    worst_equal = std::max(worst_equal, std::abs(m - theta));
  }
  const StationaryModel anchor = make_stationary_model({1.0, 1.0, 1.0, 2.0}, 0.75);
  const double am = stationary_moment(anchor, [](double z) { return 1.0 / (2.0 - z); });
  const bool ok = sign_failures == 0 && worst_equal < 1e-8 && std::abs(am - 0.75) < 1e-10;
  return {5, "stationary moment trichotomy", ok,
          std::to_string(sign_failures) + " sign failures, alpha=beta max error " +
              fmt("%.2e", worst_equal) + ", anchor error " + fmt("%.2e", std::abs(am - 0.75)),
          0};
}

CriterionResult invasion(const SuiteOptions&) {
  RngStream rng(kSuiteSeed, {6, 0, 0});
  double worst_equal = 0.0;
  for (int s = 0; s < 20; ++s) {
    WfParams wp = random_wf(rng);
    wp.alpha = wp.beta;
    worst_equal = std::max(worst_equal, std::abs(invasion_criterion(wp).integral - 1.0));
  }
  const double anchor = invasion_criterion({1.0, 2.0, 1.0, 2.0}).integral;
  int mismatches = 0;
  const WfParams base{1.0, 1.0, 1.0, 2.0};
  for (int k = 0; k <= 40; ++k) {
    WfParams wp = base;
    wp.alpha = base.beta * (0.5 + k / 40.0);
    if (invasion_criterion(wp).dies_out != (wp.alpha >= wp.beta)) ++mismatches;
  }
  const bool ok = worst_equal < 1e-10 && std::abs(anchor - 7.0 / 12.0) < 1e-10 && mismatches == 0;
  return {6, "invasion criterion", ok,
          "alpha=beta max |I-1| " + fmt("%.2e", worst_equal) + ", anchor error " +
              fmt("%.2e", std::abs(anchor - 7.0 / 12.0)) + ", " + std::to_string(mismatches) +
              " grid mismatches",
          0};
}

/// Fraction of replicas whose final particle mean satisfies `good`.
double fixation_fraction(const WfParams& wp, std::size_t replicas, unsigned threads,
                         const std::function<bool(double)>& good) {
  const MeanfieldModel model = meanfield_model(wp, 500);
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 300.0;
  cfg.record_stride = cfg.steps();
  const auto finals = ensemble_map<double>(
      model, uniform_initial(kSuiteSeed + 7, 500, 0.3, 0.7), cfg, kSuiteSeed + 7, replicas,
      threads, [](std::uint64_t, const Path& p) {
        const auto x = p.state(p.size() - 1);
        double m = 0.0;
        for (double z : x) m += z;
        return m / static_cast<double>(x.size());
      });
  const auto hits = std::count_if(finals.begin(), finals.end(), good);
  return static_cast<double>(hits) / static_cast<double>(replicas);
}

CriterionResult fixation(const SuiteOptions& opt) {
  const std::size_t R = scaled_replicas(10, opt);
  const double hi = 1.0 - 0.05 * tol_scale(opt);
  const double lo = 0.05 * tol_scale(opt);
  const double up = fixation_fraction({1.0, 0.5, 1.0, 2.0}, R, opt.threads,
                                      [hi](double m) { return m >= hi; });
  const double down = fixation_fraction({1.0, 2.0, 1.0, 2.0}, R, opt.threads,
                                        [lo](double m) { return m <= lo; });
  const bool ok = up >= 0.9 && down >= 0.9;
  return {7, "fixation dynamics", ok,
          "alpha=0.5 fixed " + fmt("%.0f%%", 100.0 * up) + ", alpha=2 lost " +
              fmt("%.0f%%", 100.0 * down),
          0};
}

CriterionResult stationary_occupation(const SuiteOptions& opt) {
  const WfParams wp{1.0, 1.0, 1.0, 2.0};
  const FrozenThetaModel model = frozen_theta_model(wp, 0.75);
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 2100.0;
  cfg.record_stride = 20;
  const Path path = integrate(model, std::vector<double>{0.5}, cfg, kSuiteSeed + 8, 0);
  std::vector<double> samples;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path.times[k] >= 100.0 - 1e-9 && k > 0) samples.push_back(path.at(k, 0));
  }
  const double d = ks_distance(samples, stationary_cdf_table(make_stationary_model(wp, 0.75)));
  const double limit = 0.05 * tol_scale(opt);
  return {8, "stationary density", d < limit,
          "KS " + fmt("%.4f", d) + " over " + std::to_string(samples.size()) + " points", 0};
}

CriterionResult monotone_moment(const SuiteOptions& opt) {
  const std::size_t R = std::max<std::size_t>(2, scaled_replicas(20, opt));
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 20.0;
  cfg.record_stride = 100;
  std::ostringstream detail;
  bool ok = true;
  for (double alpha : {2.0, 0.5, 1.0}) {
    const WfParams wp{1.0, alpha, 1.0, 2.0};
    const MeanfieldModel model = meanfield_model(wp, 1000);
    std::vector<double> times;
    const auto series = ensemble_map<std::vector<double>>(
        model, uniform_initial(kSuiteSeed + 9, 1000, 0.3, 0.7), cfg, kSuiteSeed + 9, R,
        opt.threads, [&](std::uint64_t r, const Path& p) {
          if (r == 0) times = p.times;
          return inverse_gap_series(p, wp.a);
        });
    try {
      const MonotoneVerdict v = monotone_moment_check(times, series, wp);
      ok = ok && v.consistent;
      detail << "alpha=" << alpha << ' ' << to_string(v.verdict) << " (slope "
             << fmt("%.2e", v.slope_mean) << " +- " << fmt("%.1e", v.slope_stderr) << ") ";
    } catch (const InsufficientReplicas& e) {
      ok = false;
      detail << "alpha=" << alpha << " unresolved: " << e.what() << ' ';
    }
  }
  return {9, "monotone moment", ok, detail.str(), 0};
}

CriterionResult propagation_of_chaos(const SuiteOptions& opt) {
  CouplingConfig cc;
  cc.replicas = std::max<std::size_t>(2, scaled_replicas(200, opt));
  cc.seed = kSuiteSeed + 10;
  cc.threads = opt.threads;
  const auto rows = coupling_experiment({1.0, 1.0, 1.0, 2.0}, cc);
  double lo = INFINITY;
  double hi = 0.0;
  std::ostringstream detail;
  for (const auto& r : rows) {
    if (std::abs(r.t - cc.t_end) > 1e-9) continue;
    lo = std::min(lo, r.sqrtD_error);
    hi = std::max(hi, r.sqrtD_error);
    detail << "D=" << r.D << ": " << fmt("%.4f", r.sqrtD_error) << ' ';
  }
  const double ratio = hi / lo;
  detail << "ratio " << fmt("%.3f", ratio);
  return {10, "propagation of chaos", ratio <= 2.0 * tol_scale(opt), detail.str(), 0};
}

struct MomentEstimate {
  double mean = 0.0;
  double mean_se = 0.0;
  double var = 0.0;
  double var_se = 0.0;
};

MomentEstimate moments(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  MomentEstimate m;
  for (double v : x) m.mean += v;
  m.mean /= n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : x) {
    const double d = (v - m.mean) * (v - m.mean);
    m2 += d;
    m4 += d * d;
  }
  m.var = m2 / (n - 1.0);
  m4 /= n;
  const double s2 = m2 / n;
  m.mean_se = std::sqrt(m.var / n);
  m.var_se = std::sqrt(std::max(0.0, m4 - s2 * s2) / n);
  return m;
}

CriterionResult micro_convergence(const SuiteOptions& opt) {
  const EcologyParams p = pset();
  const LimitConstants lc = derive_limit_constants(p);
  const DemeGraph g = build_deme_graph({GraphKind::complete_uniform, 4});
  const std::vector<double> F0{0.3, 0.45, 0.55, 0.7};
  const auto hfp0 = equilibrium_hfp_state(p, F0);
  const ScalingSchedule sched{1.0, 1.0, 1.0};
  const std::size_t R = std::max<std::size_t>(2, scaled_replicas(50, opt));
  IntegratorConfig cfg;
  cfg.dt = 2e-3;

  std::ostringstream detail;
  std::vector<double> stat;
  std::vector<double> stat_se;
  std::vector<std::vector<double>> finals_largest(4);
  const std::vector<double> Ns{50.0, 200.0, 800.0};
  for (double N : Ns) {
    std::vector<DeviationSeries> runs(R);
    std::vector<std::vector<double>> finals(R);
    parallel_for(R, opt.threads, [&](std::size_t r) {
      const Path path = rescaled_frequency_run(p, sched, g, N, 1.0, 1e-3, cfg, hfp0,
                                               kSuiteSeed + 11, r);
      runs[r] = deviation_statistic(path, p, lc, g, N);
      const auto last = path.state(path.size() - 1);
      finals[r].assign(last.begin() + 4, last.begin() + 8);
    });
    const MeanSeries ms = deviation_ensemble(runs);
    stat.push_back(ms.value.back());
    stat_se.push_back(ms.stderr_.back());
    detail << "N=" << N << ": " << fmt("%.4f", ms.value.back()) << " +- "
           << fmt("%.4f", ms.stderr_.back()) << "; ";
    if (N == Ns.back()) {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t r = 0; r < R; ++r) finals_largest[i].push_back(finals[r][i]);
      }
    }
  }
  bool monotone = true;
  for (std::size_t k = 0; k + 1 < stat.size(); ++k) {
    const double band = std::hypot(stat_se[k], stat_se[k + 1]) * tol_scale(opt);
    monotone = monotone && stat[k + 1] <= stat[k] + band;
  }

  const WfParams wp{sched.kappa, sched.alpha, sched.beta_target, lc.a};
  const WfSpatialModel ref = wf_spatial_model(wp, g);
  IntegratorConfig rc;
  rc.dt = 1e-4;
  rc.t_end = 1.0;
  rc.record_stride = rc.steps();
  const std::size_t R_ref = scaled_replicas(4000, opt);
  const auto ref_finals = ensemble_map<std::vector<double>>(
      ref, [&](std::uint64_t) { return F0; }, rc, kSuiteSeed + 111, R_ref, opt.threads,
      [](std::uint64_t, const Path& path) {
        const auto x = path.state(path.size() - 1);
        return std::vector<double>(x.begin(), x.end());
      });
  bool moments_ok = true;
  double worst_mean = 0.0;
  double worst_var = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<double> ref_i;
    for (const auto& f : ref_finals) ref_i.push_back(f[i]);
    const MomentEstimate a = moments(finals_largest[i]);
    const MomentEstimate b = moments(ref_i);
    const double zm = std::abs(a.mean - b.mean) / std::hypot(a.mean_se, b.mean_se);
    const double zv = std::abs(a.var - b.var) / std::hypot(a.var_se, b.var_se);
    worst_mean = std::max(worst_mean, zm);
    worst_var = std::max(worst_var, zv);
    moments_ok = moments_ok && zm <= 3.0 * tol_scale(opt) && zv <= 3.0 * tol_scale(opt);
  }
  detail << "(a) " << (monotone ? "non-increasing" : "increasing") << "; (b) max z mean "
         << fmt("%.2f", worst_mean) << ", max z var " << fmt("%.2f", worst_var);
  return {11, "micro-to-limit convergence", monotone && moments_ok, detail.str(), 0};
}

CriterionResult algebraic_equivalences(const SuiteOptions&) {
  RngStream rng(kSuiteSeed, {12, 0, 0});
  double worst_drift = 0.0;
  for (int s = 0; s < 1000; ++s) {
    WfParams wp;
    wp.kappa = rng.uniform(0.1, 3.0);
    wp.alpha = rng.uniform(0.1, 3.0);
    wp.beta = rng.uniform(0.1, 3.0);
    wp.a = rng.uniform(1.1, 4.0);
    const auto D = static_cast<std::size_t>(rng.uniform(2.0, 41.0));
    std::vector<double> x(D);
    for (double& v : x) v = rng.uniform();
    std::vector<double> d1(D);
    std::vector<double> d2(D);
    meanfield_model(wp, D).drift(0.0, x, d1);
    wf_spatial_model(wp, build_deme_graph({GraphKind::complete_uniform, D})).drift(0.0, x, d2);
    for (std::size_t i = 0; i < D; ++i) worst_drift = std::max(worst_drift, std::abs(d1[i] - d2[i]));
  }
  std::size_t violations = 0;
  for (int s = 0; s < 100; ++s) {
    WfParams wp;
    wp.kappa = rng.uniform(0.1, 3.0);
    wp.alpha = rng.uniform(0.1, 3.0);
    wp.beta = rng.uniform(0.1, 3.0);
    wp.a = rng.uniform(1.1, 4.0);
    const double L = lipschitz_constant(wp);
    const double u_max = 2.0 / (wp.a - 1.0);
    for (int k = 0; k < 1000; ++k) {
      const double x = rng.uniform();
      const double y = rng.uniform();
      const double u = rng.uniform(0.0, u_max);
      const double v = rng.uniform(0.0, u_max);
      const double slack = 1e-12 * (1.0 + L);
      if (x >= y && wf_drift(wp, u, x) - wf_drift(wp, v, y) >
                        L * (x - y) + L * std::max(u - v, 0.0) + slack) {
        ++violations;
      }
      if (wf_variance(wp, x) > L * (x + x * x) + slack) ++violations;
      if (std::abs(inverse_gap(wp.a, x) - inverse_gap(wp.a, y)) > L * std::abs(x - y) + slack) {
        ++violations;
      }
    }
  }
  const bool ok = worst_drift < 1e-12 && violations == 0;
  return {12, "algebraic equivalences", ok,
          "max drift difference " + fmt("%.2e", worst_drift) + ", " + std::to_string(violations) +
              " inequality violations in 1e5 pairs",
          0};
}

}  // namespace

std::vector<int> suite_criteria(const std::string& group) {
  if (group == "identities") return {1, 2, 3, 12};
  if (group == "fixation") return {7, 9};
  if (group == "stationary") return {4, 5, 8};
  if (group == "convergence") return {11};
  if (group == "chaos") return {10};
  if (group == "invasion") return {6};
  if (group == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw ConfigError("unknown suite '" + group + "'");
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  static const std::function<CriterionResult(const SuiteOptions&)> table[] = {
      equilibrium_identities, lotka_volterra_attractor, lyapunov_dissipation_check,
      gamma_identity,         trichotomy,               invasion,
      fixation,               stationary_occupation,    monotone_moment,
      propagation_of_chaos,   micro_convergence,        algebraic_equivalences};
  if (id < 1 || id > 12) throw ConfigError("criterion id must be in 1..12");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](opt);
  } catch (const Error& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "C%-2d %-30s %s %8.2fs  ", r.id, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds);
  return head + r.detail;
}

int run_suite(const std::string& group, const SuiteOptions& opt, std::ostream& out) {
  std::vector<int> ids;
  try {
    ids = suite_criteria(group);
  } catch (const ConfigError& e) {
    out << e.what() << '\n';
    return 2;
  }
  bool all = true;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opt);
    out << format_result(r) << std::endl;
    all = all && r.passed;
  }
  out << (all ? "all criteria passed" : "some criteria FAILED") << (opt.fast ? " (fast mode)" : "")
      << '\n';
  return all ? 0 : 1;
}

}  // namespace altruism
