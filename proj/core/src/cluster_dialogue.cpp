#include "tsctag/cluster_dialogue.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tsctag {

double union_density(double internal_sum1, std::size_t size1,
                     double internal_sum2, std::size_t size2,
                     double cross_weight) {
  const std::size_t k = size1 + size2;
  if (k < 2) throw std::invalid_argument("union_density: union needs two nodes");
  const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
  return (internal_sum1 + internal_sum2 + cross_weight) / pairs;
}

WeightedDisjointSets::WeightedDisjointSets(const Sag& graph)
    : graph_(&graph), parent_(graph.node_count()), sets_(graph.node_count()) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
  for (NodeId v = 0; v < parent_.size(); ++v) sets_[v].members = {v};
}

NodeId WeightedDisjointSets::find(NodeId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

double WeightedDisjointSets::cross_weight(NodeId root_a, NodeId root_b) {
  if (sets_[root_a].members.size() > sets_[root_b].members.size())
    std::swap(root_a, root_b);
  double cross = 0.0;
  for (NodeId m : sets_[root_a].members) {
    for (auto idx : graph_->out_edges(m)) {
      const Edge& e = graph_->edge(idx);
      if (find(e.y) == root_b) cross += e.w;
    }
    for (auto idx : graph_->in_edges(m)) {
      const Edge& e = graph_->edge(idx);
      if (find(e.x) == root_b) cross += e.w;
    }
  }
  return cross;
}

NodeId WeightedDisjointSets::unite(NodeId root_a, NodeId root_b, double cross) {
  if (root_a == root_b) throw std::invalid_argument("unite: same set");
  // Union by size; the larger member list absorbs the smaller one.
  if (sets_[root_a].members.size() < sets_[root_b].members.size())
    std::swap(root_a, root_b);
  SetInfo& big = sets_[root_a];
  SetInfo& small = sets_[root_b];
  big.internal += small.internal + cross;
  big.members.insert(big.members.end(), small.members.begin(), small.members.end());
  small.members.clear();
  small.members.shrink_to_fit();
  small.internal = 0.0;
  parent_[root_b] = root_a;
  return root_a;
}

std::vector<std::size_t> dialogue_edge_order(const Sag& graph) {
  std::vector<std::size_t> order(graph.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto edges = graph.edges();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edge& ea = edges[a];
    const Edge& eb = edges[b];
    if (ea.w != eb.w) return ea.w > eb.w;
    if (ea.x != eb.x) return ea.x < eb.x;
    return ea.y < eb.y;
  });
  return order;
}

DialogueResult cluster_dialogue(const Sag& graph, double rho_d) {
  WeightedDisjointSets dsu(graph);
  DialogueResult result;

  // A union's density depends only on the two sets, so a rejection stays
  // valid until one of them grows. Many edges usually join the same pair of
  // sets; remembering rejections by set version avoids rescanning them.
  std::vector<std::uint32_t> version(graph.node_count(), 0);
  struct Rejection {
    std::uint32_t version_lo, version_hi;
  };
  std::unordered_map<std::uint64_t, Rejection> rejected;
  auto key = [](NodeId lo, NodeId hi) { return (std::uint64_t{lo} << 32) | hi; };

  for (std::size_t idx : dialogue_edge_order(graph)) {
    const Edge& e = graph.edge(idx);
    const NodeId a = dsu.find(e.x);
    const NodeId b = dsu.find(e.y);
    if (a == b) continue;
    const NodeId lo = std::min(a, b), hi = std::max(a, b);
    const auto it = rejected.find(key(lo, hi));
    if (it != rejected.end() && it->second.version_lo == version[lo] &&
        it->second.version_hi == version[hi])
      continue;
    const double cross = dsu.cross_weight(a, b);
    const double density = union_density(dsu.internal_weight(a), dsu.size(a),
                                         dsu.internal_weight(b), dsu.size(b), cross);
    if (density > rho_d) {
      const NodeId root = dsu.unite(a, b, cross);
      ++version[root];
      result.merges.push_back(DialogueMerge{e.x, e.y, density, dsu.size(root)});
    } else {
      rejected[key(lo, hi)] = Rejection{version[lo], version[hi]};
    }
  }

  std::vector<std::size_t> labels(graph.node_count());
  for (NodeId v = 0; v < labels.size(); ++v) labels[v] = dsu.find(v);
  result.partition = Partition::from_labels(labels);
  return result;
}

}  // namespace tsctag
