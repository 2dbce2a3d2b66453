#include "tsctag/influence.hpp"

#include <cmath>
#include <stdexcept>

namespace tsctag {

std::vector<double> popularity(const Partition& partition) {
  const std::size_t k = partition.topic_count();
  std::vector<double> p(partition.comment_count());
  if (k == 0) return p;
  double log_sum = 0.0;
  for (std::size_t t = 0; t < k; ++t)
    log_sum += std::log(static_cast<double>(partition.topic_size(t)));
  const double log_geo_mean = log_sum / static_cast<double>(k);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double size = static_cast<double>(partition.topic_size(partition.topic_of(i)));
    p[i] = std::exp(std::log(size) - log_geo_mean);
  }
  return p;
}

InfluenceMatrix::InfluenceMatrix(std::size_t n, std::span<const Edge> intra_edges)
    : n_(n) {
  std::vector<std::uint32_t> out_deg(n, 0), in_deg(n, 0);
  for (const Edge& e : intra_edges) {
    if (e.x >= n || e.y >= n || e.x >= e.y)
      throw std::invalid_argument("InfluenceMatrix: bad edge");
    ++out_deg[e.x];
    ++in_deg[e.y];
  }
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] = out_offsets_[v] + out_deg[v];
    in_offsets_[v + 1] = in_offsets_[v] + in_deg[v];
  }
  out_.resize(intra_edges.size());
  in_.resize(intra_edges.size());
  std::vector<std::uint32_t> op(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::uint32_t> ip(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const Edge& e : intra_edges) {
    out_[op[e.x]++] = Entry{e.y, e.w};
    in_[ip[e.y]++] = Entry{e.x, e.w};
  }
}

std::span<const InfluenceMatrix::Entry> InfluenceMatrix::row(NodeId i) const {
  return std::span<const Entry>(out_).subspan(out_offsets_[i],
                                              out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const InfluenceMatrix::Entry> InfluenceMatrix::column(NodeId i) const {
  return std::span<const Entry>(in_).subspan(in_offsets_[i],
                                             in_offsets_[i + 1] - in_offsets_[i]);
}

double InfluenceMatrix::at(NodeId i, NodeId j) const {
  for (const Entry& e : row(i))
    if (e.other == j) return e.w;
  return 0.0;
}

InfluenceMatrix influence_matrix(const Sag& graph, const Partition& partition) {
  if (graph.node_count() != partition.comment_count())
    throw std::invalid_argument("influence_matrix: graph/partition size mismatch");
  std::vector<Edge> intra;
  for (const Edge& e : graph.edges())
    if (partition.topic_of(e.x) == partition.topic_of(e.y)) intra.push_back(e);
  return InfluenceMatrix(graph.node_count(), intra);
}

InfluenceResult iterate_influence(const InfluenceMatrix& matrix, int turns,
                                  double tol, const InfluenceObserver& observer) {
  if (turns < 1) throw std::invalid_argument("iterate_influence: turns must be >= 1");
  const std::size_t n = matrix.size();
  InfluenceResult result;
  result.values.assign(n, 1.0);
  std::vector<double>& I = result.values;
  std::vector<double> previous(n);

  for (int turn = 1; turn <= turns; ++turn) {
    previous = I;
    // Amplify: later comments are already updated when i is processed.
    for (std::size_t i = n; i-- > 0;) {
      double gain = 0.0;
      for (const auto& e : matrix.row(static_cast<NodeId>(i))) gain += e.w * I[e.other];
      I[i] += gain;
    }
    // Normalize: earlier comments are already updated when i is processed.
    for (std::size_t i = 0; i < n; ++i) {
      double inflow = 0.0;
      for (const auto& e : matrix.column(static_cast<NodeId>(i))) inflow += e.w * I[e.other];
      I[i] = I[i] / (I[i] + inflow);
    }
    result.turns = turn;
    if (observer) observer(turn, I);

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(I[i] - previous[i]) / previous[i];
    result.last_change = n == 0 ? 0.0 : change / static_cast<double>(n);
    if (result.last_change < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

std::vector<double> comment_weights(std::span<const double> popularity,
                                    std::span<const double> influence) {
  if (popularity.size() != influence.size())
    throw std::invalid_argument("comment_weights: size mismatch");
  std::vector<double> w(popularity.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = popularity[i] * influence[i];
  return w;
}

}  // namespace tsctag
