// Semantic association graph over one video's comments.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsctag/embedding.hpp"

namespace tsctag {

using NodeId = std::uint32_t;

/// Directed edge from an earlier comment `x` to a later comment `y`.
struct Edge {
  NodeId x = 0;
  NodeId y = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Exponential time decay exp(-gamma_t * dt). Throws on dt < 0.
double decay(double dt, double gamma_t);

/// Immutable DAG whose topological order is the node id order. Every stored
/// edge has x < y and w > 0; (x, y) pairs are unique.
class Sag {
 public:
  Sag() = default;
  /// Validates the edge list and builds in/out adjacency.
  Sag(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Indices into edges() of edges leaving / entering `v`.
  std::span<const std::uint32_t> out_edges(NodeId v) const;
  std::span<const std::uint32_t> in_edges(NodeId v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<std::uint32_t> out_index_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<std::uint32_t> in_index_;
};

struct SagOptions {
  double gamma_t = 0.12;
  double edge_cutoff_eps = 1e-4;
};

/// Builds the graph from comments already in (t, input order). For each pair
/// u < v the candidate weight is cosine(vec_u, vec_v) * decay(t_v - t_u); the
/// edge is stored iff the weight is positive and the decay factor is at least
/// `edge_cutoff_eps`.
Sag build_sag(std::span<const double> times, std::span<const Vector> vectors,
              const SagOptions& options);

}  // namespace tsctag
