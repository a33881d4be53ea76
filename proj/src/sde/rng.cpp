#include "altruism/sde/rng.hpp"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "altruism/errors.hpp"

namespace altruism {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, const StreamId& id) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xFFFFFFFFu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed),     hi(seed),     lo(id.replica), hi(id.replica),
                    lo(id.deme),  hi(id.deme),  id.channel};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, StreamId id)
    : seed_(seed), id_(id), engine_(make_engine(seed, id)) {}

double RngStream::normal() {
  // Ziggurat; stateless between calls.
  boost::random::normal_distribution<double> dist;
  return dist(engine_);
}

double RngStream::uniform() {
  boost::random::uniform_01<double> dist;
  return dist(engine_);
}

NoiseSource::NoiseSource(std::uint64_t seed, std::uint64_t replica, std::size_t demes,
                         std::size_t channels) {
  if (demes == 0 || channels == 0) throw InvalidSize("noise source needs demes and channels");
  streams_.reserve(demes * channels);
  for (std::size_t c = 0; c < channels; ++c) {
    for (std::size_t d = 0; d < demes; ++d) {
      streams_.emplace_back(seed, StreamId{replica, d, static_cast<std::uint32_t>(c)});
    }
  }
}

void NoiseSource::fill(std::span<double> normals) {
  if (normals.size() != streams_.size()) throw ShapeMismatch("noise buffer size mismatch");
  for (std::size_t k = 0; k < streams_.size(); ++k) normals[k] = streams_[k].normal();
}

}  // namespace altruism
