#include <doctest.h>

#include <cmath>
#include <vector>

#include "altruism/diagnostics/diagnostics.hpp"
#include "altruism/errors.hpp"
#include "altruism/sde/rng.hpp"

using namespace altruism;

namespace {

const EcologyParams kPset{2, 4, 1, 1, 2, 2, 1};

/// Single-deme HFP path with H = h(F) + dh, P = p(F) + dp on t in [0, t_end].
Path offset_path(double dh, double dp, double t_end, std::size_t points) {
  const auto lc = derive_limit_constants(kPset);
  Path p;
  p.dimension = 3;
  p.names = {"H[0]", "F[0]", "P[0]"};
  for (std::size_t k = 0; k < points; ++k) {
    const double t = t_end * static_cast<double>(k) / static_cast<double>(points - 1);
    const double f = 0.2 + 0.5 * t / t_end;
    const auto eq = equilibrium_pair(kPset, lc, f);
    p.times.push_back(t);
    p.states.insert(p.states.end(), {eq.h + dh, f, eq.p + dp});
  }
  return p;
}

Path constant_path(std::vector<double> state, std::size_t points) {
  Path p;
  p.dimension = state.size();
  for (std::size_t k = 0; k < points; ++k) {
    p.times.push_back(0.1 * static_cast<double>(k));
    p.states.insert(p.states.end(), state.begin(), state.end());
  }
  return p;
}

}  // namespace

TEST_CASE("lyapunov_value examples") {
  const auto lc = derive_limit_constants(kPset);
  for (double z : {0.0, 0.4, 1.0}) {
    const auto eq = equilibrium_pair(kPset, lc, z);
    CHECK(lyapunov_value(kPset, lc, eq.h, eq.p, z) == 0.0);
    CHECK(lyapunov_dissipation(kPset, lc, eq.h, eq.p, z) == 0.0);
  }
  const auto e0 = equilibrium_pair(kPset, lc, 0.0);
  const double expected = 2.0 * (5.0 / 3.0) * (1.0 - std::log(2.0));
  CHECK(std::abs(lyapunov_value(kPset, lc, 2.0 * e0.h, e0.p, 0.0) - expected) < 1e-13);
  CHECK(expected == doctest::Approx(1.0228).epsilon(1e-4));
  CHECK_THROWS_AS(lyapunov_value(kPset, lc, 0.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(lyapunov_value(kPset, lc, 1.0, -1.0, 0.5), DomainError);
}

TEST_CASE("deviation_statistic examples") {
  const auto lc = derive_limit_constants(kPset);
  const auto g = build_deme_graph({GraphKind::single});
  const auto zero = deviation_statistic(offset_path(0.0, 0.0, 2.0, 21), kPset, lc, g, 1.0);
  for (std::size_t k = 0; k < zero.times.size(); ++k) {
    CHECK(std::abs(zero.h_dev[k]) < 1e-28);
    CHECK(std::abs(zero.p_dev[k]) < 1e-28);
  }
  const auto unit = deviation_statistic(offset_path(1.0, 0.0, 2.0, 21), kPset, lc, g, 1.0);
  CHECK(std::abs(unit.h_integral.back() - 2.0) < 1e-12);
  CHECK(std::abs(unit.scaled_total(unit.times.size() - 1) - 2.0) < 1e-12);
  for (std::size_t k = 1; k < unit.times.size(); ++k) {
    CHECK(unit.h_integral[k] >= unit.h_integral[k - 1]);
  }
  const auto scaled = deviation_statistic(offset_path(0.0, 0.5, 2.0, 21), kPset, lc, g, 10.0);
  CHECK(std::abs(scaled.scaled_total(20) - 10.0 * 0.25 * 2.0) < 1e-12);

  const auto g2 = build_deme_graph({GraphKind::complete_uniform, 2});
  CHECK_THROWS_AS(deviation_statistic(offset_path(1.0, 0.0, 2.0, 5), kPset, lc, g2, 1.0),
                  ShapeMismatch);
}

TEST_CASE("deviation ensemble averages replicas") {
  const auto lc = derive_limit_constants(kPset);
  const auto g = build_deme_graph({GraphKind::single});
  std::vector<DeviationSeries> runs{
      deviation_statistic(offset_path(1.0, 0.0, 1.0, 11), kPset, lc, g, 2.0),
      deviation_statistic(offset_path(2.0, 0.0, 1.0, 11), kPset, lc, g, 2.0)};
  const auto m = deviation_ensemble(runs);
  CHECK(m.value.back() == doctest::Approx(0.5 * (2.0 + 8.0)));
  CHECK(m.stderr_.back() == doctest::Approx(3.0));
}

TEST_CASE("moment_monitor examples") {
  const auto g = build_deme_graph({GraphKind::single});
  const auto p = constant_path({1.0, 0.5, 1.0}, 4);
  const auto c = moment_monitor(p, kPset, g, MonitorKind::combined_p4);
  for (double v : c) CHECK(v == 625.0);
  const auto inv = moment_monitor(constant_path({2.0, 0.5, 4.0}, 3), kPset, g, MonitorKind::inv_PH);
  for (double v : inv) CHECK(v == 0.125);
  CHECK_THROWS_AS(moment_monitor(constant_path({1.0, 0.5, 0.0}, 2), kPset, g, MonitorKind::inv_P),
                  DomainError);
  CHECK(parse_monitor_kind(to_string(MonitorKind::P_over_H2)) == MonitorKind::P_over_H2);
  CHECK_THROWS_AS(parse_monitor_kind("p8"), ConfigError);
}

TEST_CASE("inverse_gap_series") {
  const auto s = inverse_gap_series(constant_path({0.0, 1.0}, 3), 2.0);
  for (double v : s) CHECK(v == 0.75);
}

TEST_CASE("monotone_moment_check examples") {
  std::vector<double> times;
  for (int k = 0; k <= 20; ++k) times.push_back(k);
  const auto series = [&](double slope, double noise) {
    std::vector<std::vector<double>> out;
    for (std::uint64_t r = 0; r < 10; ++r) {
      RngStream rng(1, {r, 0, 0});
      std::vector<double> s;
      for (double t : times) s.push_back(0.75 + slope * t + noise * rng.normal());
      out.push_back(s);
    }
    return out;
  };
  const auto flat = monotone_moment_check(times, series(0.0, 1e-3), {1.0, 1.0, 1.0, 2.0});
  CHECK(flat.verdict == Trend::Constant);
  CHECK(flat.consistent);
  const auto down = monotone_moment_check(times, series(-1e-3, 1e-3), {1.0, 2.0, 1.0, 2.0});
  CHECK(down.verdict == Trend::NonIncreasing);
  CHECK(down.expected == Trend::NonIncreasing);
  CHECK(down.consistent);
  const auto up = monotone_moment_check(times, series(1e-3, 1e-3), {1.0, 2.0, 1.0, 2.0});
  CHECK(up.verdict == Trend::NonDecreasing);
  CHECK_FALSE(up.consistent);

  const std::vector<std::vector<double>> fixed(5, std::vector<double>(times.size(), 1.0));
  CHECK(monotone_moment_check(times, fixed, {1.0, 1.0, 1.0, 2.0}).verdict == Trend::Constant);

  CHECK_THROWS_AS(monotone_moment_check(times, series(0.0, 1e-3), {1.0, 2.0, 1.0, 2.0}),
                  InsufficientReplicas);
  const std::vector<std::vector<double>> one{times};
  CHECK_THROWS_AS(monotone_moment_check(times, one, {1.0, 1.0, 1.0, 2.0}), InsufficientReplicas);
  CHECK(to_json(down)["pass"].get<bool>());
}

TEST_CASE("ks_distance examples") {
  const CdfTable uniform{{0.0, 1.0}, {0.0, 1.0}};
  const std::vector<double> zeros(10, 0.0);
  CHECK(ks_distance(zeros, uniform) == doctest::Approx(1.0));
  const std::vector<double> median{0.5};
  CHECK(ks_distance(median, uniform) == doctest::Approx(0.5));
  const auto xs = sample_from_table(uniform, 100000, 3);
  CHECK(ks_distance(xs, uniform) < 0.01);
  CHECK_THROWS_AS(ks_distance(std::vector<double>{}, uniform), EmptySample);
  CHECK(ks_two_sample(zeros, median) == 1.0);
}

TEST_CASE("series csv") {
  const std::vector<double> t{0.0, 0.5};
  const std::vector<double> v{1.0, 2.0};
  CHECK(series_csv(t, v) == "t,value,stderr\n0,1,0\n0.5,2,0\n");
}
