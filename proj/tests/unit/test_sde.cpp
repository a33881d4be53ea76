#include <doctest.h>

#include <cmath>
#include <limits>

#include "altruism/errors.hpp"
#include "altruism/sde/ensemble.hpp"
#include "altruism/sde/integrator.hpp"
#include "altruism/sde/path_io.hpp"
#include "altruism/sde/rng.hpp"

using namespace altruism;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// dx = mu x dt + s x dW, or additive noise dx = s dW when multiplicative is false.
class ScalarModel final : public SdeModel {
 public:
  ScalarModel(double mu, double s, bool multiplicative, Bounds b)
      : mu_(mu), s_(s), mult_(multiplicative), b_(b) {}

  std::size_t demes() const override { return 1; }
  std::size_t channels() const override { return 1; }
  Bounds bounds(std::size_t) const override { return b_; }
  void drift(double, std::span<const double> x, std::span<double> out) const override {
    out[0] = mu_ * x[0];
  }
  void diffusion(double, std::span<const double> x, std::span<double> out) const override {
    out[0] = mult_ ? s_ * x[0] : s_;
  }

 private:
  double mu_, s_;
  bool mult_;
  Bounds b_;
};

/// dx = sqrt(x) dW
class SqrtModel final : public SdeModel {
 public:
  std::size_t demes() const override { return 1; }
  std::size_t channels() const override { return 1; }
  Bounds bounds(std::size_t) const override { return kHalfLine; }
  void drift(double, std::span<const double>, std::span<double> out) const override { out[0] = 0; }
  void diffusion(double, std::span<const double> x, std::span<double> out) const override {
    REQUIRE(x[0] >= 0.0);
    out[0] = std::sqrt(x[0]);
  }
};

class NanModel final : public SdeModel {
 public:
  std::size_t demes() const override { return 2; }
  std::size_t channels() const override { return 1; }
  Bounds bounds(std::size_t) const override { return {-kInf, kInf}; }
  void drift(double t, std::span<const double>, std::span<double> out) const override {
    out[0] = 0.0;
    out[1] = t > 0.0045 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  }
  void diffusion(double, std::span<const double>, std::span<double> out) const override {
    out[0] = out[1] = 0.0;
  }
};

IntegratorConfig config(double dt, double t_end, std::size_t stride = 1) {
  IntegratorConfig c;
  c.dt = dt;
  c.t_end = t_end;
  c.record_stride = stride;
  return c;
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(7, {1, 2, 3});
  RngStream b(7, {1, 2, 3});
  RngStream c(7, {1, 2, 4});
  RngStream d(8, {1, 2, 3});
  int same_c = 0;
  int same_d = 0;
  for (int k = 0; k < 100; ++k) {
    const double x = a.normal();
    CHECK(x == b.normal());
    same_c += x == c.normal();
    same_d += x == d.normal();
  }
  CHECK(same_c == 0);
  CHECK(same_d == 0);
  RngStream u(1, {0, 0, 0});
  for (int k = 0; k < 1000; ++k) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("integrator config validation") {
  CHECK_THROWS_AS(config(0.0, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(config(1e-3, -1.0).validate(), ConfigError);
  CHECK_THROWS_AS(config(1e-3, 1.0, 0).validate(), ConfigError);
  auto c = config(1e-3, 1.0);
  c.floor_eps = 0.1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK(config(1e-3, 1.0).steps() == 1000);
}

TEST_CASE("zero dynamics give a constant path") {
  const ScalarModel m(0.0, 0.0, false, {-kInf, kInf});
  const double x0[] = {0.7};
  const auto p = integrate(m, x0, config(1e-2, 1.0), 3);
  CHECK(p.size() == 101);
  CHECK(p.times.front() == 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) CHECK(p.at(k, 0) == 0.7);
}

TEST_CASE("noise-free decay reduces to explicit Euler") {
  const ScalarModel m(-1.0, 0.0, false, {-kInf, kInf});
  const double x0[] = {1.0};
  const auto p = integrate(m, x0, config(1e-3, 1.0, 100), 1);
  CHECK(p.size() == 11);
  CHECK(std::abs(p.times.back() - 1.0) < 1e-12);
  CHECK(std::abs(p.at(p.size() - 1, 0) - std::exp(-1.0)) < 2e-3);
  CHECK(std::abs(p.at(p.size() - 1, 0) - std::pow(1.0 - 1e-3, 1000)) < 1e-12);
}

TEST_CASE("square-root diffusion started at zero stays at zero") {
  const SqrtModel m;
  const double x0[] = {0.0};
  for (auto policy : {BoundaryPolicy::full_truncation, BoundaryPolicy::reflect_clamp}) {
    auto c = config(1e-3, 1.0);
    c.boundary_policy = policy;
    const auto p = integrate(m, x0, c, 11);
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(p.at(k, 0) == 0.0);
  }
}

TEST_CASE("recorded states respect the domain") {
  const SqrtModel m;
  const double x0[] = {0.05};
  for (auto policy : {BoundaryPolicy::full_truncation, BoundaryPolicy::reflect_clamp}) {
    auto c = config(1e-2, 5.0);
    c.boundary_policy = policy;
    for (std::uint64_t r = 0; r < 20; ++r) {
      const auto p = integrate(m, x0, c, 5, r);
      for (std::size_t k = 0; k < p.size(); ++k) CHECK(p.at(k, 0) >= 0.0);
    }
  }
}

TEST_CASE("boundary policies") {
  CHECK(apply_boundary(-0.2, kUnitInterval, BoundaryPolicy::reflect_clamp) == 0.2);
  CHECK(apply_boundary(1.1, kUnitInterval, BoundaryPolicy::reflect_clamp) ==
        doctest::Approx(0.9));
  CHECK(apply_boundary(-3.0, kUnitInterval, BoundaryPolicy::reflect_clamp) == 0.0);
  CHECK(apply_boundary(-0.2, kUnitInterval, BoundaryPolicy::full_truncation) == -0.2);
  CHECK(clamp_to(-0.2, kUnitInterval) == 0.0);
  CHECK(clamp_to(1.5, kUnitInterval) == 1.0);
  CHECK(parse_boundary_policy(to_string(BoundaryPolicy::reflect_clamp)) ==
        BoundaryPolicy::reflect_clamp);
  CHECK_THROWS_AS(parse_boundary_policy("mirror"), ConfigError);
}

TEST_CASE("domain and finiteness errors") {
  const SqrtModel m;
  const double bad[] = {-1.0};
  CHECK_THROWS_AS(integrate(m, bad, config(1e-3, 1.0), 0), DomainError);
  const NanModel n;
  const double x0[] = {0.0, 0.0};
  try {
    integrate(n, x0, config(1e-3, 1.0), 0);
    FAIL("expected NonFiniteState");
  } catch (const NonFiniteState& e) {
    CHECK(e.step() == 6);
    CHECK(e.component() == 1);
  }
}

TEST_CASE("paths are deterministic and export to csv") {
  const ScalarModel m(0.1, 0.3, true, kHalfLine);
  const double x0[] = {1.0};
  const auto a = integrate(m, x0, config(1e-2, 1.0, 10), 42, 3);
  const auto b = integrate(m, x0, config(1e-2, 1.0, 10), 42, 3);
  const auto c = integrate(m, x0, config(1e-2, 1.0, 10), 42, 4);
  CHECK(a.states == b.states);
  CHECK(a.states != c.states);
  CHECK(a.meta.seed == 42);
  CHECK(a.meta.replica == 3);
  const auto csv = path_csv(a);
  CHECK(csv.rfind("t,x[0]\n", 0) == 0);
  CHECK(path_csv(b) == csv);
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("ensemble of one replica equals the path") {
  const ScalarModel m(0.1, 0.3, true, kHalfLine);
  const auto sampler = [](std::uint64_t) { return std::vector<double>{1.0}; };
  const auto cfg = config(1e-2, 1.0, 10);
  EnsembleOptions opt;
  opt.seed = 9;
  const auto s = ensemble(m, sampler, cfg, opt);
  const double x0[] = {1.0};
  const auto p = integrate(m, x0, cfg, 9, 0);
  REQUIRE(s.times.size() == p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    CHECK(s.mean_at(k, 0) == p.at(k, 0));
    CHECK(s.variance_at(k, 0) == 0.0);
  }
}

TEST_CASE("constant model has zero ensemble variance") {
  const ScalarModel m(0.0, 0.0, false, {-kInf, kInf});
  EnsembleOptions opt;
  opt.replicas = 7;
  opt.histogram_bins = 4;
  const auto s = ensemble(m, [](std::uint64_t) { return std::vector<double>{0.3}; },
                          config(1e-2, 0.5, 10), opt);
  for (double v : s.variance) CHECK(v == 0.0);
  CHECK(s.bin_edges.size() == 5);
  CHECK(s.histogram[1] == 1.0);
  const auto csv = ensemble_csv(s);
  CHECK(csv.rfind("t,mean_x[0],var_x[0]", 0) == 0);
  const auto j = ensemble_json(s);
  CHECK(j["histogram"]["bin_edges"].size() == 5);
}

TEST_CASE("brownian variance at t = 1") {
  const ScalarModel m(0.0, 1.0, false, {-kInf, kInf});
  EnsembleOptions opt;
  opt.seed = 2024;
  opt.replicas = 100000;
  const auto s = ensemble(m, [](std::uint64_t) { return std::vector<double>{0.0}; },
                          config(1e-2, 1.0, 100), opt);
  CHECK(std::abs(s.variance_at(1, 0) - 1.0) < 0.02);
  CHECK(std::abs(s.mean_at(1, 0)) < 0.02);
}

TEST_CASE("geometric brownian motion mean matches the closed form") {
  const double mu = 0.5;
  const ScalarModel m(mu, 0.4, true, kHalfLine);
  EnsembleOptions opt;
  opt.seed = 77;
  opt.replicas = 4000;
  const auto s = ensemble(m, [](std::uint64_t) { return std::vector<double>{1.0}; },
                          config(1e-3, 1.0, 1000), opt);
  const double se = std::sqrt(s.variance_at(1, 0) / 4000.0);
  CHECK(std::abs(s.mean_at(1, 0) - std::exp(mu)) < 3.0 * se);
}

TEST_CASE("ensemble statistics do not depend on the thread count") {
  const ScalarModel m(-0.2, 0.5, false, {-kInf, kInf});
  EnsembleOptions opt;
  opt.seed = 5;
  opt.replicas = 33;
  opt.histogram_bins = 10;
  opt.statistic = [](std::span<const double> x) { return x[0] * x[0]; };
  const auto sampler = [](std::uint64_t r) { return std::vector<double>{0.01 * r}; };
  const auto one = ensemble(m, sampler, config(1e-2, 1.0, 5), opt);
  opt.threads = 4;
  const auto four = ensemble(m, sampler, config(1e-2, 1.0, 5), opt);
  CHECK(one.mean == four.mean);
  CHECK(one.variance == four.variance);
  CHECK(one.stat_mean == four.stat_mean);
  CHECK(one.histogram == four.histogram);
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  try {
    parallel_for(20, 4, [](std::size_t i) {
      if (i == 7 || i == 13) throw DomainError("fail " + std::to_string(i));
    });
    FAIL("expected an exception");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "fail 7");
  }
}
