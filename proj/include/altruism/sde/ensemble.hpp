#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "altruism/errors.hpp"
#include "altruism/sde/integrator.hpp"

namespace altruism {

/// Runs body(i) for i in [0, n) on up to `threads` workers. The first exception
/// (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

using InitialSampler = std::function<std::vector<double>(std::uint64_t replica)>;

/// Per-replica map over integrated paths; results are in replica order.
template <class T>
std::vector<T> ensemble_map(const SdeModel& model, const InitialSampler& x0,
                            const IntegratorConfig& cfg, std::uint64_t seed, std::size_t replicas,
                            unsigned threads,
                            const std::function<T(std::uint64_t, const Path&)>& fn) {
  std::vector<T> out(replicas);
  parallel_for(replicas, threads, [&](std::size_t r) {
    const auto init = x0(r);
    Path p;
    try {
      p = integrate(model, init, cfg, seed, r);
    } catch (const NonFiniteState& e) {
      throw NonFiniteState(e.step(), e.component(), "replica " + std::to_string(r));
    }
    out[r] = fn(r, p);
  });
  return out;
}

struct EnsembleOptions {
  std::uint64_t seed = 0;
  std::size_t replicas = 1;
  unsigned threads = 1;
  std::size_t histogram_bins = 0;  ///< 0 disables the histogram reducer
  std::function<double(std::span<const double>)> statistic;  ///< optional user statistic
  /// Called once per replica, in replica order, after its path joins the reducers.
  std::function<void(std::uint64_t replica, const Path&)> on_path;
};

/// Streaming reducers evaluated at every recorded time. Aggregation happens in
/// replica order, so results do not depend on the thread count.
struct EnsembleStats {
  std::vector<double> times;
  std::vector<std::string> names;
  std::size_t replicas = 0;
  std::size_t dimension = 0;
  std::vector<double> mean;      ///< times x dimension
  std::vector<double> variance;  ///< unbiased; 0 for a single replica
  std::vector<double> stat_mean;
  std::vector<double> stat_variance;
  std::vector<double> bin_edges;  ///< histogram over [0, 1]
  std::vector<double> histogram;  ///< times x dimension x bins, fractions of replicas

  double mean_at(std::size_t k, std::size_t c) const { return mean[k * dimension + c]; }
  double variance_at(std::size_t k, std::size_t c) const { return variance[k * dimension + c]; }
};

using PathProducer = std::function<Path(std::uint64_t replica)>;

/// Reduces paths from any producer; times and names come from replica 0.
EnsembleStats ensemble(const PathProducer& produce, const EnsembleOptions& opt);

EnsembleStats ensemble(const SdeModel& model, const InitialSampler& x0,
                       const IntegratorConfig& cfg, const EnsembleOptions& opt);

/// Columns: t, mean_<name>..., var_<name>..., and stat_mean, stat_var when present.
std::string ensemble_csv(const EnsembleStats& s);
nlohmann::json ensemble_json(const EnsembleStats& s);

}  // namespace altruism
