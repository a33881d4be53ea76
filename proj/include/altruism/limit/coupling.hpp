#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altruism/limit/limit.hpp"
#include "altruism/sde/integrator.hpp"

namespace altruism {

struct CouplingConfig {
  std::vector<std::size_t> D_list{16, 64, 256};
  std::size_t D_ref = 2048;  ///< >= 4 * max(D_list), ignoring entries equal to D_ref
  double t_end = 1.0;
  double record_interval = 0.25;
  std::size_t replicas = 200;
  std::uint64_t seed = 0;
  double dt = 1e-3;
  BoundaryPolicy boundary_policy = BoundaryPolicy::full_truncation;
  double init_lo = 0.3;  ///< initial law Uniform[init_lo, init_hi)
  double init_hi = 0.7;
  unsigned threads = 1;
};

struct CouplingRow {
  std::size_t D = 0;
  double t = 0.0;
  double error = 0.0;        ///< Monte Carlo estimate of E|X_t^D(1) - M_t|
  double sqrtD_error = 0.0;
  double mc_stderr = 0.0;    ///< standard error of `error`
};

/// Synchronous coupling of mean-field systems against a large reference system:
/// particle j of every system uses the same initial value and Brownian path.
std::vector<CouplingRow> coupling_experiment(const WfParams& wp, const CouplingConfig& cfg);

/// Header `D,t,error,sqrtD_error,mc_stderr`.
std::string coupling_csv(const std::vector<CouplingRow>& rows);

}  // namespace altruism
