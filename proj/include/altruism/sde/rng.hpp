#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace altruism {

/// Identifies one driving Brownian motion: (replica, deme, channel).
struct StreamId {
  std::uint64_t replica = 0;
  std::uint64_t deme = 0;
  std::uint32_t channel = 0;

  friend bool operator==(const StreamId&, const StreamId&) = default;
};

/// Channel reserved for sampling initial conditions; never used by a model.
inline constexpr std::uint32_t kInitChannel = 0xFFFF0001u;

/// Deterministic random stream. The full (seed, id) tuple is fed to the seed
/// sequence, so distinct ids give distinct engine states.
class RngStream {
 public:
  RngStream(std::uint64_t seed, StreamId id);

  double normal();
  double uniform();  ///< in [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t seed() const noexcept { return seed_; }
  const StreamId& id() const noexcept { return id_; }

 private:
  std::uint64_t seed_;
  StreamId id_;
  std::mt19937_64 engine_;
};

/// One stream per (deme, channel) of a replica. Component k of a model state is
/// channel k / demes, deme k % demes (channel-major layout).
class NoiseSource {
 public:
  NoiseSource(std::uint64_t seed, std::uint64_t replica, std::size_t demes, std::size_t channels);

  std::size_t size() const noexcept { return streams_.size(); }
  void fill(std::span<double> normals);

 private:
  std::vector<RngStream> streams_;
};

}  // namespace altruism
