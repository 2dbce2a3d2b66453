// Dialogue-based clustering: edges in descending weight order, union-find
// merges gated by the average internal edge weight of the union.
#pragma once

#include <cstddef>
#include <vector>

#include "tsctag/partition.hpp"
#include "tsctag/sag.hpp"

namespace tsctag {

/// Average internal edge weight of S1 ∪ S2:
/// (sum1 + sum2 + cross) / (k(k-1)/2), k = size1 + size2.
double union_density(double internal_sum1, std::size_t size1,
                     double internal_sum2, std::size_t size2,
                     double cross_weight);

/// Union-find over graph nodes that tracks, per root, the set size, the sum
/// of stored edge weights inside the set, and the member list.
class WeightedDisjointSets {
 public:
  explicit WeightedDisjointSets(const Sag& graph);

  NodeId find(NodeId v);
  std::size_t size(NodeId root) const { return sets_[root].members.size(); }
  double internal_weight(NodeId root) const { return sets_[root].internal; }
  const std::vector<NodeId>& members(NodeId root) const { return sets_[root].members; }

  /// Total weight of edges with one endpoint in each of the two (distinct)
  /// roots. Scans the adjacency of the smaller set.
  double cross_weight(NodeId root_a, NodeId root_b);

  /// Merges two distinct roots given their cross weight; returns the new root.
  NodeId unite(NodeId root_a, NodeId root_b, double cross);

 private:
  struct SetInfo {
    double internal = 0.0;
    std::vector<NodeId> members;
  };

  const Sag* graph_;
  std::vector<NodeId> parent_;
  std::vector<SetInfo> sets_;
};

struct DialogueMerge {
  NodeId x = 0;  // edge that triggered the merge
  NodeId y = 0;
  double density = 0.0;
  std::size_t merged_size = 0;
};

struct DialogueResult {
  Partition partition;
  std::vector<DialogueMerge> merges;  // in execution order
};

/// Processes edges by descending weight (ties by (x, y) ascending) and merges
/// the endpoint sets iff their union density exceeds `rho_d`. Rejected merges
/// are not retried. Unmerged comments stay as singleton topics.
DialogueResult cluster_dialogue(const Sag& graph, double rho_d);

/// Edge indices of `graph` in processing order.
std::vector<std::size_t> dialogue_edge_order(const Sag& graph);

}  // namespace tsctag
