#include <doctest.h>

#include <cmath>
#include <vector>

#include "altruism/errors.hpp"
#include "altruism/limit/limit.hpp"
#include "altruism/sde/rng.hpp"
#include "altruism/simd/kernels.hpp"

using namespace altruism;

namespace {

std::vector<double> random_states(std::size_t n, std::uint64_t seed, double lo, double hi) {
  RngStream r(seed, {0, 0, 0});
  std::vector<double> x(n);
  for (auto& v : x) v = r.uniform(lo, hi);
  // Exact boundary values exercise the degenerate diffusion.
  if (n > 3) {
    x[0] = 0.0;
    x[1] = 1.0;
  }
  return x;
}

std::vector<double> normals(std::size_t n, std::uint64_t seed) {
  RngStream r(seed, {0, 0, 1});
  std::vector<double> x(n);
  for (auto& v : x) v = 3.0 * r.normal();
  return x;
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(simd::isa_available(simd::Isa::scalar));
  CHECK(simd::to_string(simd::Isa::scalar) == "scalar");
  CHECK(&simd::kernels(simd::Isa::scalar) != nullptr);
}

TEST_CASE("avx2 kernels match scalar bit for bit") {
  if (!simd::isa_available(simd::Isa::avx2)) {
    CHECK_THROWS_AS(simd::kernels(simd::Isa::avx2), ConfigError);
    return;
  }
  const auto& s = simd::kernels(simd::Isa::scalar);
  const auto& v = simd::kernels(simd::Isa::avx2);
  const simd::WfCoefficients c{1.3, 0.7, 1.1, 2.5};
  for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 64u, 1001u}) {
    for (auto policy : {BoundaryPolicy::full_truncation, BoundaryPolicy::reflect_clamp}) {
      // Out-of-domain inputs mimic the auxiliary full-truncation state.
      auto xs = random_states(n, n, -0.1, 1.1);
      auto xv = xs;
      const auto z = normals(n, n + 100);
      for (int step = 0; step < 50; ++step) {
        s.wf_step(c, 0.55, xs.data(), z.data(), n, 1e-2, 0.1, policy);
        v.wf_step(c, 0.55, xv.data(), z.data(), n, 1e-2, 0.1, policy);
      }
      CHECK(xs == xv);
    }
    const auto x = random_states(n, 3 * n, -0.2, 1.2);
    CHECK(s.inverse_gap_sum(2.5, x.data(), n) == v.inverse_gap_sum(2.5, x.data(), n));
  }
}

TEST_CASE("wf_step agrees with the reference Euler step") {
  const WfParams wp{1.3, 0.7, 1.1, 2.5};
  const std::size_t n = 37;
  const auto model = frozen_theta_model(wp, 0.55, n);
  for (auto policy : {BoundaryPolicy::full_truncation, BoundaryPolicy::reflect_clamp}) {
    StepContext ctx{1e-2, 0.1, policy};
    auto x1 = random_states(n, 11, 0.0, 1.0);
    auto x2 = x1;
    const auto z = normals(n, 12);
    StepWorkspace ws1;
    StepWorkspace ws2;
    ws1.resize(n);
    ws2.resize(n);
    for (int step = 0; step < 20; ++step) {
      model.step(0.0, x1, z, ctx, ws1);
      euler_step_generic(model, 0.0, x2, z, ctx, ws2);
    }
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(x1[k] - x2[k]) < 1e-13);
  }
}

TEST_CASE("meanfield step override agrees with the reference Euler step") {
  const WfParams wp{1.0, 2.0, 1.0, 2.0};
  const std::size_t n = 50;
  const auto model = meanfield_model(wp, n);
  StepContext ctx{1e-2, 0.1, BoundaryPolicy::full_truncation};
  auto x1 = random_states(n, 21, 0.0, 1.0);
  auto x2 = x1;
  StepWorkspace ws1;
  StepWorkspace ws2;
  ws1.resize(n);
  ws2.resize(n);
  for (int step = 0; step < 20; ++step) {
    const auto z = normals(n, 100 + step);
    model.step(0.0, x1, z, ctx, ws1);
    euler_step_generic(model, 0.0, x2, z, ctx, ws2);
  }
  for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(x1[k] - x2[k]) < 1e-12);
}

TEST_CASE("inverse gap sum") {
  const std::vector<double> x{0.0, 0.5, 1.0, 0.25, 0.75};
  double ref = 0.0;
  for (double v : x) ref += 1.0 / (2.0 - v);
  CHECK(simd::kernels().inverse_gap_sum(2.0, x.data(), x.size()) == doctest::Approx(ref));
  CHECK(simd::mean_inverse_gap(2.0, x) == doctest::Approx(ref / 5.0));
}
