#include <doctest.h>

#include <cmath>
#include <numbers>

#include "altruism/analytics/invasion.hpp"
#include "altruism/analytics/quadrature.hpp"
#include "altruism/analytics/stationary.hpp"
#include "altruism/diagnostics/diagnostics.hpp"
#include "altruism/errors.hpp"

using namespace altruism;

namespace {

const WfParams kUnit{1.0, 1.0, 1.0, 2.0};

}  // namespace

TEST_CASE("quadrature with endpoint singularities") {
  // int_0^1 z^(-1/2) (1-z)^(-1/2) dz = pi
  const auto r = integrate_beta_weighted(0.5, 0.5, [](double, double) { return 1.0; }, 1e-12);
  CHECK(std::abs(r.value - std::numbers::pi) < 1e-12);
  // int_0^1 z^(0.3) dz = 1/1.3
  const auto q = integrate_power_left(1.3, 1.0, [](double, double) { return 1.0; }, 1e-13);
  CHECK(std::abs(q.value - 1.0 / 1.3) < 1e-13);
  const auto s = integrate_smooth([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-13);
  CHECK(std::abs(s.value - (std::exp(1.0) - 1.0)) < 1e-13);
  CHECK_THROWS_AS(integrate_beta_weighted(0.0, 1.0, [](double, double) { return 1.0; }, 1e-10),
                  DomainError);
}

TEST_CASE("speed_density examples") {
  const auto sm = make_stationary_model(kUnit, 0.75);
  CHECK(sm.u == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sm.v == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sm.gap_exponent() == 1.0);
  CHECK(std::abs(speed_density(sm, 0.5) - std::sqrt(2.0) * 1.5) < 1e-13);
  CHECK(std::abs(sm.c_theta - 8.0 / 3.0) < 1e-10);
  CHECK_THROWS_AS(speed_density(sm, 0.0), DomainError);
  CHECK_THROWS_AS(speed_density(sm, 1.0), DomainError);
}

TEST_CASE("normalizer agrees with the log-Gamma closed form") {
  for (double alpha : {0.5, 1.0, 1.5, 2.5}) {
    for (double theta : {0.55, 0.75, 0.95}) {
      const auto sm = make_stationary_model({1.3, alpha, 1.0, 2.0}, theta);
      CHECK(std::abs(sm.c_theta - speed_normalizer_closed_form(sm)) < 1e-9 * sm.c_theta);
    }
  }
  const auto bad = make_stationary_model({1.0, 0.7, 1.0, 2.0}, 0.75);
  CHECK_THROWS_AS(speed_normalizer_closed_form(bad), DomainError);
}

TEST_CASE("stationary_moment examples") {
  const auto sm = make_stationary_model(kUnit, 0.75);
  CHECK(std::abs(stationary_moment(sm, [](double) { return 1.0; }) - 1.0) < 1e-10);
  CHECK(std::abs(stationary_moment(sm, [](double z) { return 1.0 / (2.0 - z); }) - 0.75) < 1e-10);
  const auto costly = make_stationary_model({1.0, 2.0, 1.0, 2.0}, 0.75);
  CHECK(stationary_moment(costly, [](double z) { return 1.0 / (2.0 - z); }) < 0.75);
}

TEST_CASE("gamma identity examples") {
  CHECK(std::abs(gamma_identity_residual(kUnit, 0.75)) < 1e-10);
  CHECK(std::abs(gamma_identity_closed_form(kUnit, 0.75)) < 1e-12);
  const WfParams a3{1.0, 1.0, 1.0, 3.0};
  const double mid = 0.5 * (1.0 / 3.0 + 0.5);
  CHECK(std::abs(gamma_identity_residual(a3, mid)) < 1e-10);
  CHECK_THROWS_AS(gamma_identity_residual(kUnit, 0.5), ThetaOutOfRange);
  CHECK_THROWS_AS(gamma_identity_residual(kUnit, 1.0), ThetaOutOfRange);
}

TEST_CASE("fixation_classify examples") {
  CHECK(fixation_classify({1.0, 2.0, 1.0, 2.0}, 0.5).outcome == FixationOutcome::ConvergesTo0);
  CHECK(fixation_classify({1.0, 1.0, 2.0, 2.0}, 0.5).outcome == FixationOutcome::ConvergesTo1);
  CHECK(fixation_classify({1.0, 2.0, 1.0, 2.0}, 1.0).outcome == FixationOutcome::AllOne);
  CHECK(fixation_classify({1.0, 1.0, 2.0, 2.0}, 0.0).outcome == FixationOutcome::AllZero);
  const auto s = fixation_classify(kUnit, 0.5, 0.75);
  CHECK(s.outcome == FixationOutcome::StationaryDensity);
  REQUIRE(s.stationary.has_value());
  CHECK(s.stationary->c_theta == doctest::Approx(8.0 / 3.0));
  CHECK_THROWS_AS(fixation_classify(kUnit, 0.5), ConfigError);
  CHECK_THROWS_AS(fixation_classify(kUnit, 1.5), DomainError);
  CHECK(to_string(FixationOutcome::ConvergesTo1) == "ConvergesTo1");
}

TEST_CASE("scale_function examples") {
  CHECK(scale_function(kUnit, 0.0).s == 1.0);
  CHECK(scale_function(kUnit, 0.0).S == 0.0);
  CHECK(std::abs(scale_function(kUnit, 0.5).s - 32.0 / 9.0) < 1e-13);
  double prev = 0.0;
  double prev_S = -1.0;
  for (int k = 0; k < 100; ++k) {
    const double z = k / 100.0;
    const auto v = scale_function({0.7, 1.3, 0.9, 2.5}, z);
    CHECK(v.s > prev);
    CHECK(v.S >= prev_S);
    CHECK(v.S <= z * v.s * (1.0 + 1e-12));
    prev = v.s;
    prev_S = v.S;
  }
  CHECK_THROWS_AS(scale_function(kUnit, 1.0), DomainError);
  CHECK_THROWS_AS(scale_function(kUnit, -0.1), DomainError);
}

TEST_CASE("colonization_rate examples") {
  CHECK(colonization_rate(kUnit, 0.0) == 0.0);
  CHECK(colonization_rate(kUnit, 1.0) == 2.0);
  CHECK(colonization_rate(kUnit, 1.5) == 2.5);
}

TEST_CASE("invasion_criterion examples") {
  for (double kappa : {0.3, 1.0, 4.0}) {
    const auto r = invasion_criterion({kappa, 1.7, 1.7, 2.3});
    CHECK(std::abs(r.integral - 1.0) < 1e-12);
    CHECK(r.dies_out);
  }
  const auto r = invasion_criterion({1.0, 2.0, 1.0, 2.0});
  CHECK(std::abs(r.integral - 7.0 / 12.0) < 1e-10);
  CHECK(r.dies_out);
  CHECK(std::abs(invasion_integral_direct({1.0, 2.0, 1.0, 2.0}) - 7.0 / 12.0) < 1e-10);
  const auto grow = invasion_criterion({1.0, 0.5, 1.0, 2.0});
  CHECK(grow.integral > 1.0);
  CHECK_FALSE(grow.dies_out);
  const auto j = to_json(r);
  for (const char* key : {"integral", "dies_out", "alpha", "beta", "kappa", "a"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["dies_out"].get<bool>());
}

TEST_CASE("sample_stationary examples") {
  const auto sm = make_stationary_model(kUnit, 0.75);
  CHECK(sample_stationary(sm, 0, 1).empty());

  const std::size_t n = 1000000;
  const auto xs = sample_stationary(sm, n, 2024);
  double mean = 0.0;
  double sq = 0.0;
  for (double z : xs) {
    const double f = 1.0 / (2.0 - z);
    mean += f;
    sq += f * f;
  }
  mean /= static_cast<double>(n);
  const double var = sq / static_cast<double>(n) - mean * mean;
  CHECK(std::abs(mean - 0.75) < 3.0 * std::sqrt(var / static_cast<double>(n)));

  const auto a = sample_stationary(sm, 100000, 1);
  const auto b = sample_stationary(sm, 100000, 2);
  CHECK(ks_two_sample(a, b) < 0.01);
  CHECK(sample_stationary(sm, 10, 5) == sample_stationary(sm, 10, 5));
}

TEST_CASE("cdf table") {
  const auto sm = make_stationary_model(kUnit, 0.75);
  const auto t = stationary_cdf_table(sm);
  CHECK(t.z.front() == 0.0);
  CHECK(t.z.back() == 1.0);
  for (std::size_t k = 1; k < t.cdf.size(); ++k) CHECK(t.cdf[k] >= t.cdf[k - 1]);
  // Exact CDF: (1/c) int_0^x (1-z)^(-1/2)(2-z) dz with c = 8/3
  const auto exact = [](double x) {
    const double w = std::sqrt(1.0 - x);
    return (2.0 * (1.0 - w) + (2.0 / 3.0) * (1.0 - w * w * w)) / (8.0 / 3.0);
  };
  for (double x : {0.1, 0.5, 0.9, 0.999}) CHECK(std::abs(t.eval(x) - exact(x)) < 1e-6);
  CHECK(t.inverse(t.eval(0.3)) == doctest::Approx(0.3).epsilon(1e-9));
  const auto csv = density_table_csv(sm, stationary_cdf_table(sm, 5));
  CHECK(csv.rfind("z,m_theta,cdf\n", 0) == 0);
  CHECK_THROWS_AS(stationary_cdf_table(sm, 2), InvalidSize);
}
