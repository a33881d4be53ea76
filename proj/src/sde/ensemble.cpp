#include "altruism/sde/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "altruism/errors.hpp"
#include "altruism/sde/path_io.hpp"

namespace altruism {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_index = n;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Welford {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  double variance() const { return n > 1.0 ? m2 / (n - 1.0) : 0.0; }
};

}  // namespace

EnsembleStats ensemble(const PathProducer& produce, const EnsembleOptions& opt) {
  if (opt.replicas < 1) throw ConfigError("ensemble requires at least one replica");
  const std::size_t bins = opt.histogram_bins;

  EnsembleStats s;
  s.replicas = opt.replicas;
  std::size_t records = 0;
  std::size_t dim = 0;
  std::vector<Welford> comp;
  std::vector<Welford> stat;
  std::vector<double> counts;

  // Replicas run in parallel chunks; reduction walks each chunk in replica order.
  const std::size_t chunk = std::max<std::size_t>(1, 4 * std::max(1u, opt.threads));
  for (std::size_t base = 0; base < opt.replicas; base += chunk) {
    const std::size_t len = std::min(chunk, opt.replicas - base);
    std::vector<Path> paths(len);
    parallel_for(len, opt.threads, [&](std::size_t i) {
      const std::uint64_t r = base + i;
      try {
        paths[i] = produce(r);
      } catch (const NonFiniteState& e) {
        throw NonFiniteState(e.step(), e.component(), "replica " + std::to_string(r));
      }
    });
    for (std::size_t i = 0; i < len; ++i) {
      const Path& p = paths[i];
      if (base + i == 0) {
        s.times = p.times;
        s.names = p.names;
        records = p.size();
        dim = p.dimension;
        s.dimension = dim;
        comp.resize(records * dim);
        stat.resize(opt.statistic ? records : 0);
        counts.assign(records * dim * bins, 0.0);
      } else if (p.size() != records || p.dimension != dim) {
        throw ShapeMismatch("replica paths differ in shape");
      }
      for (std::size_t k = 0; k < records; ++k) {
        const auto x = p.state(k);
        for (std::size_t c = 0; c < dim; ++c) {
          comp[k * dim + c].add(x[c]);
          if (bins > 0 && x[c] >= 0.0 && x[c] <= 1.0) {
            const auto b = std::min(bins - 1, static_cast<std::size_t>(x[c] * static_cast<double>(bins)));
            counts[(k * dim + c) * bins + b] += 1.0;
          }
        }
        if (opt.statistic) stat[k].add(opt.statistic(x));
      }
      if (opt.on_path) opt.on_path(base + i, p);
    }
  }

  s.mean.resize(records * dim);
  s.variance.resize(records * dim);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    s.mean[i] = comp[i].mean;
    s.variance[i] = comp[i].variance();
  }
  for (const auto& w : stat) {
    s.stat_mean.push_back(w.mean);
    s.stat_variance.push_back(w.variance());
  }
  if (bins > 0) {
    s.bin_edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) s.bin_edges[b] = static_cast<double>(b) / static_cast<double>(bins);
    s.histogram.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      s.histogram[i] = counts[i] / static_cast<double>(opt.replicas);
    }
  }
  return s;
}

EnsembleStats ensemble(const SdeModel& model, const InitialSampler& x0,
                       const IntegratorConfig& cfg, const EnsembleOptions& opt) {
  return ensemble([&](std::uint64_t r) { return integrate(model, x0(r), cfg, opt.seed, r); }, opt);
}

std::string ensemble_csv(const EnsembleStats& s) {
  std::ostringstream out;
  out << "t";
  for (const auto& n : s.names) out << ",mean_" << n;
  for (const auto& n : s.names) out << ",var_" << n;
  const bool has_stat = !s.stat_mean.empty();
  if (has_stat) out << ",stat_mean,stat_var";
  out << '\n';
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    out << format_double(s.times[k]);
    for (std::size_t c = 0; c < s.dimension; ++c) out << ',' << format_double(s.mean_at(k, c));
    for (std::size_t c = 0; c < s.dimension; ++c) out << ',' << format_double(s.variance_at(k, c));
    if (has_stat) out << ',' << format_double(s.stat_mean[k]) << ',' << format_double(s.stat_variance[k]);
    out << '\n';
  }
  return out.str();
}

nlohmann::json ensemble_json(const EnsembleStats& s) {
  nlohmann::json j;
  j["replicas"] = s.replicas;
  j["components"] = s.names;
  j["times"] = s.times;
  j["mean"] = s.mean;
  j["variance"] = s.variance;
  if (!s.stat_mean.empty()) {
    j["statistic"] = {{"mean", s.stat_mean}, {"variance", s.stat_variance}};
  }
  if (!s.bin_edges.empty()) {
    j["histogram"] = {{"bin_edges", s.bin_edges},
                      {"layout", "time-major, then component, then bin"},
                      {"fractions", s.histogram}};
  }
  return j;
}

}  // namespace altruism
