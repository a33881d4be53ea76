#include "altruism/limit/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "altruism/errors.hpp"
#include "altruism/sde/ensemble.hpp"
#include "altruism/sde/path_io.hpp"

namespace altruism {

std::vector<CouplingRow> coupling_experiment(const WfParams& wp, const CouplingConfig& cfg) {
  wp.validate();
  if (cfg.D_list.empty()) throw ConfigError("coupling experiment needs at least one D");
  // D == D_ref is admitted as a control: it reproduces the reference exactly.
  std::size_t d_max = 0;
  for (std::size_t D : cfg.D_list) {
    if (D == 0) throw InvalidSize("coupling experiment needs D >= 1");
    if (D != cfg.D_ref) d_max = std::max(d_max, D);
  }
  if (cfg.D_ref < 4 * d_max) throw ConfigError("D_ref must be at least 4 * max(D_list)");
  if (cfg.replicas < 2) throw InsufficientReplicas("coupling experiment needs >= 2 replicas");

  IntegratorConfig ic;
  ic.dt = cfg.dt;
  ic.t_end = cfg.t_end;
  ic.boundary_policy = cfg.boundary_policy;
  const double stride = cfg.record_interval / cfg.dt;
  if (!(stride >= 1.0) || std::abs(stride - std::round(stride)) > 1e-9 * stride) {
    throw ConfigError("record_interval must be a positive multiple of dt");
  }
  ic.record_stride = static_cast<std::size_t>(std::llround(stride));
  ic.validate();
  const std::size_t records = ic.steps() / ic.record_stride + 1;

  const MeanfieldModel reference(wp, cfg.D_ref);
  std::vector<MeanfieldModel> systems;
  for (std::size_t D : cfg.D_list) systems.emplace_back(wp, D);
  const InitialSampler init = uniform_initial(cfg.seed, cfg.D_ref, cfg.init_lo, cfg.init_hi);

  // diffs[r][s * records + k] = |X^{D_s}_{t_k}(1) - M_{t_k}|
  const std::size_t S = systems.size();
  std::vector<std::vector<double>> diffs(cfg.replicas, std::vector<double>(S * records));
  parallel_for(cfg.replicas, cfg.threads, [&](std::size_t r) {
    const auto x0 = init(r);
    const Path ref = integrate(reference, x0, ic, cfg.seed, r);
    for (std::size_t s = 0; s < S; ++s) {
      const std::size_t D = cfg.D_list[s];
      const Path sys = integrate(systems[s], std::span<const double>(x0.data(), D), ic, cfg.seed, r);
      for (std::size_t k = 0; k < records; ++k) {
        diffs[r][s * records + k] = std::abs(sys.at(k, 0) - ref.at(k, 0));
      }
    }
  });

  std::vector<CouplingRow> rows;
  const double R = static_cast<double>(cfg.replicas);
  for (std::size_t s = 0; s < S; ++s) {
    for (std::size_t k = 0; k < records; ++k) {
      double mean = 0.0;
      for (std::size_t r = 0; r < cfg.replicas; ++r) mean += diffs[r][s * records + k];
      mean /= R;
      double ss = 0.0;
      for (std::size_t r = 0; r < cfg.replicas; ++r) {
        const double d = diffs[r][s * records + k] - mean;
        ss += d * d;
      }
      CouplingRow row;
      row.D = cfg.D_list[s];
      row.t = static_cast<double>(k * ic.record_stride) * ic.dt;
      row.error = mean;
      row.sqrtD_error = std::sqrt(static_cast<double>(row.D)) * mean;
      row.mc_stderr = std::sqrt(ss / (R - 1.0) / R);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string coupling_csv(const std::vector<CouplingRow>& rows) {
  std::ostringstream out;
  out << "D,t,error,sqrtD_error,mc_stderr\n";
  for (const auto& r : rows) {
    out << r.D << ',' << format_double(r.t) << ',' << format_double(r.error) << ','
        << format_double(r.sqrtD_error) << ',' << format_double(r.mc_stderr) << '\n';
  }
  return out.str();
}

}  // namespace altruism
