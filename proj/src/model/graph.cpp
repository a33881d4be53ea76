#include "altruism/model/graph.hpp"

#include <algorithm>
#include <cmath>

#include "altruism/errors.hpp"

namespace altruism {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::single: return "single";
    case GraphKind::complete_uniform: return "complete_uniform";
    case GraphKind::torus1d: return "torus1d";
    case GraphKind::torus2d: return "torus2d";
  }
  return "?";
}

GraphKind parse_graph_kind(const std::string& s) {
  if (s == "single") return GraphKind::single;
  if (s == "complete_uniform") return GraphKind::complete_uniform;
  if (s == "torus1d") return GraphKind::torus1d;
  if (s == "torus2d") return GraphKind::torus2d;
  throw ConfigError("unknown graph kind: " + s);
}

DemeGraph::DemeGraph(std::vector<double> m, std::vector<double> sigma)
    : m_(std::move(m)), sigma_(std::move(sigma)) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw InvalidSize("deme graph must have at least one deme");
  if (m_.size() != n * n) throw ShapeMismatch("migration matrix is not D x D");
  for (double s : sigma_) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidParameters("weights must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m_[i * n + j] < 0.0) throw InvalidParameters("negative migration rate");
      row += m_[i * n + j];
      col += m_[j * n + i];
    }
    if (std::abs(row - 1.0) > 1e-12 || std::abs(col - 1.0) > 1e-12) {
      throw InvalidParameters("migration matrix must be doubly stochastic");
    }
  }
  c_ = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += sigma_[i] * m_[i * n + j];
    c_ = std::max(c_, acc / sigma_[j]);
  }
}

DemeGraph DemeGraph::permuted(const std::vector<std::size_t>& perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw ShapeMismatch("permutation size differs from deme count");
  std::vector<double> m(n * n);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = sigma_[perm[i]];
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = m_[perm[i] * n + perm[j]];
  }
  return DemeGraph(std::move(m), std::move(s));
}

namespace {

std::size_t ring_distance(std::size_t i, std::size_t n) { return std::min(i, n - i); }

}  // namespace

DemeGraph build_deme_graph(const GraphSpec& spec) {
  if (!(spec.weight_decay > 0.0 && spec.weight_decay <= 1.0)) {
    throw InvalidParameters("weight_decay must lie in (0, 1]");
  }
  switch (spec.kind) {
    case GraphKind::single:
      return DemeGraph({1.0}, {1.0});
    case GraphKind::complete_uniform: {
      const std::size_t n = spec.D;
      if (n == 0) throw InvalidSize("complete_uniform requires D >= 1");
      const double w = 1.0 / static_cast<double>(n);
      return DemeGraph(std::vector<double>(n * n, w), std::vector<double>(n, w));
    }
    case GraphKind::torus1d: {
      const std::size_t n = spec.D;
      if (n == 0) throw InvalidSize("torus1d requires D >= 1");
      std::vector<double> m(n * n, 0.0);
      std::vector<double> sigma(n);
      for (std::size_t i = 0; i < n; ++i) {
        // Accumulate so that D = 1, 2 fold the two neighbours onto the same entry.
        m[i * n + (i + 1) % n] += 0.5;
        m[i * n + (i + n - 1) % n] += 0.5;
        sigma[i] = std::pow(spec.weight_decay, static_cast<double>(ring_distance(i, n)));
      }
      return DemeGraph(std::move(m), std::move(sigma));
    }
    case GraphKind::torus2d: {
      const std::size_t nx = spec.Dx;
      const std::size_t ny = spec.Dy;
      if (nx == 0 || ny == 0) throw InvalidSize("torus2d requires Dx, Dy >= 1");
      const std::size_t n = nx * ny;
      std::vector<double> m(n * n, 0.0);
      std::vector<double> sigma(n);
      auto idx = [&](std::size_t x, std::size_t y) { return y * nx + x; };
      for (std::size_t y = 0; y < ny; ++y) {
        for (std::size_t x = 0; x < nx; ++x) {
          const std::size_t i = idx(x, y);
          m[i * n + idx((x + 1) % nx, y)] += 0.25;
          m[i * n + idx((x + nx - 1) % nx, y)] += 0.25;
          m[i * n + idx(x, (y + 1) % ny)] += 0.25;
          m[i * n + idx(x, (y + ny - 1) % ny)] += 0.25;
          const auto d = ring_distance(x, nx) + ring_distance(y, ny);
          sigma[i] = std::pow(spec.weight_decay, static_cast<double>(d));
        }
      }
      return DemeGraph(std::move(m), std::move(sigma));
    }
  }
  throw ConfigError("unhandled graph kind");
}

}  // namespace altruism
