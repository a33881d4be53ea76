#include "altruism/diagnostics/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "altruism/errors.hpp"
#include "altruism/sde/path_io.hpp"

namespace altruism {

namespace {

/// x - h - h ln(x/h), accurate near x = h.
double entropy_gap(double x, double h) {
  const double r1 = (x - h) / h;
  return h * (r1 - std::log1p(r1));
}

void check_hfp_shape(const Path& path, const DemeGraph& g) {
  if (path.dimension != 3 * g.size()) {
    throw ShapeMismatch("path has " + std::to_string(path.dimension) +
                        " components, graph expects " + std::to_string(3 * g.size()));
  }
  if (path.states.size() != path.size() * path.dimension) {
    throw ShapeMismatch("path state buffer does not match its time grid");
  }
}

}  // namespace

double lyapunov_value(const EcologyParams& p, const LimitConstants& lc, double x, double y,
                      double z) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("Lyapunov function needs x > 0 and y > 0");
  const auto eq = equilibrium_pair(p, lc, z);
  return (p.eta - p.rho * z) * entropy_gap(x, eq.h) + p.delta * entropy_gap(y, eq.p);
}

double lyapunov_dissipation(const EcologyParams& p, const LimitConstants& lc, double x, double y,
                            double z) {
  const auto eq = equilibrium_pair(p, lc, z);
  const double dh = x - eq.h;
  const double dp = y - eq.p;
  return (p.eta - p.rho * z) * (p.lambda / p.K) * dh * dh + p.delta * p.gamma * dp * dp;
}

DeviationSeries deviation_statistic(const Path& path, const EcologyParams& p,
                                    const LimitConstants& lc, const DemeGraph& g, double N,
                                    std::span<const std::size_t> demes) {
  check_hfp_shape(path, g);
  const std::size_t D = g.size();
  std::vector<std::size_t> all;
  if (demes.empty()) {
    all.resize(D);
    for (std::size_t i = 0; i < D; ++i) all[i] = i;
    demes = all;
  }
  for (std::size_t i : demes) {
    if (i >= D) throw ShapeMismatch("deme index out of range");
  }
  DeviationSeries s;
  s.N = N;
  s.times = path.times;
  const std::size_t T = path.size();
  s.h_dev.resize(T);
  s.p_dev.resize(T);
  s.h_integral.assign(T, 0.0);
  s.p_integral.assign(T, 0.0);
  for (std::size_t k = 0; k < T; ++k) {
    double hs = 0.0;
    double ps = 0.0;
    for (std::size_t i : demes) {
      const double H = path.at(k, i);
      const double F = path.at(k, D + i);
      const double P = path.at(k, 2 * D + i);
      const auto eq = equilibrium_pair(p, lc, F);
      hs += g.sigma()[i] * (H - eq.h) * (H - eq.h);
      ps += g.sigma()[i] * (P - eq.p) * (P - eq.p);
    }
    s.h_dev[k] = hs;
    s.p_dev[k] = ps;
    if (k > 0) {
      const double dt = s.times[k] - s.times[k - 1];
      s.h_integral[k] = s.h_integral[k - 1] + 0.5 * dt * (s.h_dev[k - 1] + hs);
      s.p_integral[k] = s.p_integral[k - 1] + 0.5 * dt * (s.p_dev[k - 1] + ps);
    }
  }
  return s;
}

MeanSeries deviation_ensemble(std::span<const DeviationSeries> runs) {
  if (runs.empty()) throw EmptySample("no deviation series to average");
  const std::size_t T = runs.front().times.size();
  for (const auto& r : runs) {
    if (r.times.size() != T) throw ShapeMismatch("deviation series have different lengths");
  }
  MeanSeries out;
  out.times = runs.front().times;
  out.value.resize(T);
  out.stderr_.resize(T);
  const double R = static_cast<double>(runs.size());
  for (std::size_t k = 0; k < T; ++k) {
    double mean = 0.0;
    for (const auto& r : runs) mean += r.scaled_total(k);
    mean /= R;
    double ss = 0.0;
    for (const auto& r : runs) {
      const double d = r.scaled_total(k) - mean;
      ss += d * d;
    }
    out.value[k] = mean;
    out.stderr_[k] = runs.size() > 1 ? std::sqrt(ss / (R - 1.0) / R) : 0.0;
  }
  return out;
}

std::string to_string(MonitorKind k) {
  switch (k) {
    case MonitorKind::combined_p4: return "combined_p4";
    case MonitorKind::inv_H2: return "inv_H2";
    case MonitorKind::P_over_H2: return "P_over_H2";
    case MonitorKind::inv_P: return "inv_P";
    case MonitorKind::inv_PH: return "inv_PH";
  }
  return "?";
}

MonitorKind parse_monitor_kind(const std::string& s) {
  for (auto k : {MonitorKind::combined_p4, MonitorKind::inv_H2, MonitorKind::P_over_H2,
                 MonitorKind::inv_P, MonitorKind::inv_PH}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("unknown moment monitor '" + s + "'");
}

std::vector<double> moment_monitor(const Path& path, const EcologyParams& p, const DemeGraph& g,
                                   MonitorKind which) {
  check_hfp_shape(path, g);
  const std::size_t D = g.size();
  const bool needs_h = which != MonitorKind::combined_p4 && which != MonitorKind::inv_P;
  const bool needs_p = which == MonitorKind::inv_P || which == MonitorKind::inv_PH;
  std::vector<double> out(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < D; ++i) {
      const double H = path.at(k, i);
      const double P = path.at(k, 2 * D + i);
      if (needs_h && !(H > 0.0)) throw DomainError("monitor " + to_string(which) + " needs H > 0");
      if (needs_p && !(P > 0.0)) throw DomainError("monitor " + to_string(which) + " needs P > 0");
      double v = 0.0;
      switch (which) {
        case MonitorKind::combined_p4: {
          const double c = 2.0 * p.eta * H + p.delta * P;
          v = (c * c) * (c * c);
          break;
        }
        case MonitorKind::inv_H2: v = 1.0 / (H * H); break;
        case MonitorKind::P_over_H2: v = P / (H * H); break;
        case MonitorKind::inv_P: v = 1.0 / P; break;
        case MonitorKind::inv_PH: v = 1.0 / (P * H); break;
      }
      sum += g.sigma()[i] * v;
    }
    out[k] = sum;
  }
  return out;
}

std::vector<double> inverse_gap_series(const Path& path, double a) {
  if (path.dimension == 0) throw ShapeMismatch("empty path");
  std::vector<double> out(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    double sum = 0.0;
    for (double z : path.state(k)) sum += inverse_gap(a, z);
    out[k] = sum / static_cast<double>(path.dimension);
  }
  return out;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::NonIncreasing: return "NonIncreasing";
    case Trend::NonDecreasing: return "NonDecreasing";
    case Trend::Constant: return "Constant";
  }
  return "?";
}

MonotoneVerdict monotone_moment_check(std::span<const double> times,
                                      const std::vector<std::vector<double>>& series,
                                      const WfParams& wp) {
  if (series.size() < 2) throw InsufficientReplicas("monotone check needs at least two replicas");
  const std::size_t T = times.size();
  if (T < 2) throw ShapeMismatch("monotone check needs at least two time points");
  double tbar = 0.0;
  for (double t : times) tbar += t;
  tbar /= static_cast<double>(T);
  double stt = 0.0;
  for (double t : times) stt += (t - tbar) * (t - tbar);

  std::vector<double> slopes;
  slopes.reserve(series.size());
  for (const auto& y : series) {
    if (y.size() != T) throw ShapeMismatch("series length differs from the time grid");
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(T);
    double sty = 0.0;
    for (std::size_t k = 0; k < T; ++k) sty += (times[k] - tbar) * (y[k] - ybar);
    slopes.push_back(sty / stt);
  }
  const double R = static_cast<double>(slopes.size());
  double mean = 0.0;
  for (double s : slopes) mean += s;
  mean /= R;
  double ss = 0.0;
  for (double s : slopes) ss += (s - mean) * (s - mean);
  const double se = std::sqrt(ss / (R - 1.0) / R);

  MonotoneVerdict v;
  v.slope_mean = mean;
  v.slope_stderr = se;
  v.expected = wp.alpha > wp.beta   ? Trend::NonIncreasing
               : wp.alpha < wp.beta ? Trend::NonDecreasing
                                    : Trend::Constant;
  // Exact constancy up to the rounding of the fit itself.
  const double exact_band = 64.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, std::abs(mean));
  if (std::abs(mean) <= 3.0 * se || (se == 0.0 && std::abs(mean) <= exact_band)) {
    if (v.expected != Trend::Constant && se > 0.0) {
      throw InsufficientReplicas("slope " + std::to_string(mean) + " is within 3 stderr (" +
                                 std::to_string(se) + ") of zero");
    }
    v.verdict = Trend::Constant;
  } else {
    v.verdict = mean < 0.0 ? Trend::NonIncreasing : Trend::NonDecreasing;
  }
  v.consistent = v.verdict == v.expected ||
                 (v.verdict == Trend::Constant && se == 0.0);
  return v;
}

double ks_distance(std::span<const double> samples, const CdfTable& table) {
  if (samples.empty()) throw EmptySample("KS distance needs at least one sample");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = table.eval(x[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n));
  }
  return d;
}

double ks_two_sample(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw EmptySample("KS distance needs nonempty samples");
  std::vector<double> a(x.begin(), x.end());
  std::vector<double> b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return d;
}

std::string series_csv(std::span<const double> times, std::span<const double> value,
                       std::span<const double> stderr_) {
  if (value.size() != times.size() || (!stderr_.empty() && stderr_.size() != times.size())) {
    throw ShapeMismatch("series columns differ in length");
  }
  std::ostringstream out;
  out << "t,value,stderr\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    out << format_double(times[k]) << ',' << format_double(value[k]) << ','
        << format_double(stderr_.empty() ? 0.0 : stderr_[k]) << '\n';
  }
  return out.str();
}

Json to_json(const MonotoneVerdict& v) {
  return Json{{"verdict", to_string(v.verdict)},
              {"expected", to_string(v.expected)},
              {"slope_mean", v.slope_mean},
              {"slope_stderr", v.slope_stderr},
              {"pass", v.consistent}};
}

}  // namespace altruism
