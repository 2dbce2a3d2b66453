#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random_graphs.hpp"
#include "tsctag/cluster_dialogue.hpp"

namespace tsctag {
namespace {

std::vector<Edge> edge_list(const Sag& g) { return {g.edges().begin(), g.edges().end()}; }

TEST(UnionDensity, HandCases) {
  EXPECT_DOUBLE_EQ(union_density(0, 1, 0, 1, 0.8), 0.8);
  EXPECT_DOUBLE_EQ(union_density(0, 1, 0, 1, 0.0), 0.0);
  // A pair with internal sum 0.9 joined with a singleton over cross 0.5.
  EXPECT_NEAR(union_density(0.9, 2, 0, 1, 0.5), 1.4 / 3.0, 1e-15);
  EXPECT_NEAR(union_density(0.9, 2, 0, 1, 0.5), 0.4667, 5e-5);
}

TEST(UnionDensity, AgreesWithExplicitEdgeSum) {
  // {0,1} internal 0.9; node 2 joins with edges 0.2 and 0.3.
  const std::vector<Edge> edges{{0, 1, 0.9}, {0, 2, 0.2}, {1, 2, 0.3}};
  double total = 0.0;
  for (const auto& e : edges) total += e.w;
  EXPECT_NEAR(union_density(0.9, 2, 0.0, 1, 0.5), total / 3.0, 1e-15);
}

TEST(ClusterDialogue, StrongEdgeMerges) {
  const Sag g(2, {Edge{0, 1, 0.9}});
  const auto r = cluster_dialogue(g, 0.34);
  EXPECT_EQ(r.partition.topic_count(), 1u);
  ASSERT_EQ(r.merges.size(), 1u);
  EXPECT_DOUBLE_EQ(r.merges[0].density, 0.9);
}

TEST(ClusterDialogue, WeakEdgeStaysApart) {
  const Sag g(2, {Edge{0, 1, 0.2}});
  const auto r = cluster_dialogue(g, 0.34);
  EXPECT_EQ(r.partition.topic_count(), 2u);
  EXPECT_TRUE(r.merges.empty());
}

TEST(ClusterDialogue, ThresholdIsStrict) {
  const Sag g(2, {Edge{0, 1, 0.5}});
  EXPECT_EQ(cluster_dialogue(g, 0.5).partition.topic_count(), 2u);
}

TEST(ClusterDialogue, CrossWeightCountsAllUnionEdges) {
  // Merging {0,1} with {2,3} over the 0.3 edge: using only that edge would
  // give (0.9+0.9+0.3)/6 = 0.35; all four cross edges give 0.5.
  const Sag g(4, {Edge{0, 1, 0.9}, Edge{2, 3, 0.9}, Edge{0, 2, 0.3}, Edge{0, 3, 0.3},
                  Edge{1, 2, 0.3}, Edge{1, 3, 0.3}});
  const auto loose = cluster_dialogue(g, 0.40);
  EXPECT_EQ(loose.partition.topic_count(), 1u);
  EXPECT_NEAR(loose.merges.back().density, (0.9 + 0.9 + 1.2) / 6.0, 1e-12);
}

TEST(ClusterDialogue, WeakBridgeIsRejected) {
  // (0,1) and (2,3) merge; the bridge (1,2) gives 1.8/6 = 0.3 < 0.5.
  const Sag g(4, {Edge{0, 1, 0.8}, Edge{1, 2, 0.3}, Edge{2, 3, 0.7}});
  const auto r = cluster_dialogue(g, 0.5);
  EXPECT_EQ(r.partition, Partition::from_labels(std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(ClusterDialogue, TiesFollowEdgeIdOrder) {
  const Sag g(3, {Edge{1, 2, 0.5}, Edge{0, 1, 0.5}, Edge{0, 2, 0.5}});
  const auto order = dialogue_edge_order(g);
  EXPECT_EQ(g.edge(order[0]), (Edge{0, 1, 0.5}));
  EXPECT_EQ(g.edge(order[1]), (Edge{0, 2, 0.5}));
  EXPECT_EQ(g.edge(order[2]), (Edge{1, 2, 0.5}));
  // (0,1) merges at 0.5; adding 2 via (0,2) needs (0.5+1.0)/3 = 0.5 > 0.49.
  const auto r = cluster_dialogue(g, 0.49);
  ASSERT_EQ(r.merges.size(), 2u);
  EXPECT_EQ(r.merges[0].x, 0u);
  EXPECT_EQ(r.merges[0].y, 1u);
}

TEST(ClusterDialogue, EmptyAndEdgelessGraphs) {
  EXPECT_EQ(cluster_dialogue(Sag(0, {}), 0.34).partition.topic_count(), 0u);
  EXPECT_EQ(cluster_dialogue(Sag(4, {}), 0.34).partition, Partition::singletons(4));
}

TEST(ClusterDialogue, MatchesRescanOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> prob(0.1, 0.9), rho(0.05, 0.7);
  for (int trial = 0; trial < 500; ++trial) {
    const Sag g = testing::random_graph(rng, size(rng), prob(rng), trial % 2 ? 8 : 0);
    const double rho_d = rho(rng);
    EXPECT_EQ(cluster_dialogue(g, rho_d).partition,
              oracle::dialogue(g.node_count(), edge_list(g), rho_d))
        << "trial " << trial;
  }
}

TEST(ClusterDialogue, EveryMergeExceedsThresholdAndCoarsens) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Sag g = testing::random_graph(rng, 40, 0.2);
    const auto r = cluster_dialogue(g, 0.3);
    for (const auto& m : r.merges) {
      EXPECT_GT(m.density, 0.3);
      EXPECT_GE(m.merged_size, 2u);
    }
    EXPECT_EQ(r.partition.topic_count(), g.node_count() - r.merges.size());
    // A topic is unchanged after its last merge, so its final density,
    // recomputed from the edge list, must still exceed the threshold.
    for (std::size_t t = 0; t < r.partition.topic_count(); ++t) {
      const auto mem = r.partition.members(t);
      if (mem.size() < 2) continue;
      double sum = 0.0;
      for (const Edge& e : g.edges())
        if (r.partition.topic_of(e.x) == t && r.partition.topic_of(e.y) == t) sum += e.w;
      const double k = static_cast<double>(mem.size());
      EXPECT_GT(sum / (k * (k - 1) / 2.0), 0.3 - 1e-12);
    }
  }
}

TEST(WeightedDisjointSets, TracksSizesAndInternalWeight) {
  const Sag g(4, {Edge{0, 1, 0.5}, Edge{1, 2, 0.25}, Edge{0, 3, 0.125}});
  WeightedDisjointSets dsu(g);
  const NodeId a = dsu.unite(dsu.find(0), dsu.find(1), dsu.cross_weight(0, 1));
  EXPECT_EQ(dsu.size(a), 2u);
  EXPECT_DOUBLE_EQ(dsu.internal_weight(a), 0.5);
  const double cross = dsu.cross_weight(a, dsu.find(2));
  EXPECT_DOUBLE_EQ(cross, 0.25);
  const NodeId b = dsu.unite(a, dsu.find(2), cross);
  EXPECT_EQ(dsu.size(b), 3u);
  EXPECT_DOUBLE_EQ(dsu.internal_weight(b), 0.75);
  EXPECT_DOUBLE_EQ(dsu.cross_weight(b, dsu.find(3)), 0.125);
  EXPECT_THROW(dsu.unite(b, b, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace tsctag
