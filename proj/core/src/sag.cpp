#include "tsctag/sag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tsctag {

double decay(double dt, double gamma_t) {
  if (dt < 0.0) throw std::invalid_argument("decay: negative time interval");
  return std::exp(-gamma_t * dt);
}

Sag::Sag(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ > std::numeric_limits<NodeId>::max())
    throw std::invalid_argument("Sag: too many nodes");
  std::vector<std::uint32_t> out_deg(n_, 0), in_deg(n_, 0);
  for (const Edge& e : edges_) {
    if (e.x >= n_ || e.y >= n_)
      throw std::invalid_argument("Sag: edge endpoint out of range");
    if (e.x >= e.y)
      throw std::invalid_argument("Sag: edge must point from earlier to later");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw std::invalid_argument("Sag: edge weight must be positive");
    ++out_deg[e.x];
    ++in_deg[e.y];
  }

  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    out_offsets_[v + 1] = out_offsets_[v] + out_deg[v];
    in_offsets_[v + 1] = in_offsets_[v] + in_deg[v];
  }
  out_index_.resize(edges_.size());
  in_index_.resize(edges_.size());
  std::vector<std::uint32_t> out_pos(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::uint32_t> in_pos(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    out_index_[out_pos[edges_[i].x]++] = i;
    in_index_[in_pos[edges_[i].y]++] = i;
  }

  // Duplicate detection: within each out-list, targets must be distinct.
  for (std::size_t v = 0; v < n_; ++v) {
    std::vector<NodeId> targets;
    for (auto idx : out_edges(static_cast<NodeId>(v)))
      targets.push_back(edges_[idx].y);
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
      throw std::invalid_argument("Sag: duplicate edge from node " +
                                  std::to_string(v));
  }
}

std::span<const std::uint32_t> Sag::out_edges(NodeId v) const {
  return std::span<const std::uint32_t>(out_index_)
      .subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const std::uint32_t> Sag::in_edges(NodeId v) const {
  return std::span<const std::uint32_t>(in_index_)
      .subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

Sag build_sag(std::span<const double> times, std::span<const Vector> vectors,
              const SagOptions& options) {
  if (times.size() != vectors.size())
    throw std::invalid_argument("build_sag: times/vectors size mismatch");
  if (!std::is_sorted(times.begin(), times.end()))
    throw std::invalid_argument("build_sag: comments must be time-ordered");
  if (options.gamma_t < 0.0)
    throw std::invalid_argument("build_sag: gamma_t must be >= 0");

  const std::size_t n = times.size();
  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = norm(vectors[i]);

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    if (norms[u] == 0.0) continue;
    for (std::size_t v = u + 1; v < n; ++v) {
      const double delay = decay(times[v] - times[u], options.gamma_t);
      // Times are sorted, so every later v decays at least as much.
      if (delay < options.edge_cutoff_eps) break;
      if (norms[v] == 0.0) continue;
      if (vectors[v].size() != vectors[u].size())
        throw std::invalid_argument("build_sag: vector length mismatch");
      const double sim =
          std::clamp(dot(vectors[u], vectors[v]) / (norms[u] * norms[v]), -1.0, 1.0);
      const double w = sim * delay;
      if (w > 0.0)
        edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }
  }
  return Sag(n, std::move(edges));
}

}  // namespace tsctag
