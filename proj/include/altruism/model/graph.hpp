#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace altruism {

enum class GraphKind { single, complete_uniform, torus1d, torus2d };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(const std::string& s);

struct GraphSpec {
  GraphKind kind = GraphKind::single;
  std::size_t D = 1;   ///< deme count for complete_uniform and torus1d
  std::size_t Dx = 1;  ///< torus2d extent
  std::size_t Dy = 1;
  double weight_decay = 0.5;
};

/// Finite deme set with a doubly stochastic migration matrix and summable weights.
class DemeGraph {
 public:
  DemeGraph(std::vector<double> m, std::vector<double> sigma);

  std::size_t size() const noexcept { return sigma_.size(); }
  double m(std::size_t i, std::size_t j) const noexcept { return m_[i * size() + j]; }
  const std::vector<double>& matrix() const noexcept { return m_; }
  const std::vector<double>& sigma() const noexcept { return sigma_; }
  /// Tight constant: max_j (sum_i sigma_i m(i,j)) / sigma_j.
  double c() const noexcept { return c_; }

  /// Relabels demes: new deme k is old deme perm[k].
  DemeGraph permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<double> m_;
  std::vector<double> sigma_;
  double c_ = 1.0;
};

/// Throws InvalidSize for zero extents and InvalidParameters for a decay outside (0, 1].
DemeGraph build_deme_graph(const GraphSpec& spec);

}  // namespace altruism
