#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tsctag/metrics.hpp"

namespace tsctag {
namespace {

using Words = std::vector<std::string>;

Words letters(std::string s) {
  Words out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

TEST(PrecisionRecallF1, Perfect) {
  const Words w = letters("abcdefghij");
  const PrfScore s = precision_recall_f1(w, w, 10);
  EXPECT_DOUBLE_EQ(s.precision, 1.0);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.f1, 1.0);
}

TEST(PrecisionRecallF1, ThreeHitsOfSixAtTen) {
  const PrfScore s = precision_recall_f1(letters("abcxyzuvwq"), letters("abcdef"), 10);
  EXPECT_NEAR(s.precision, 0.3, 1e-15);
  EXPECT_NEAR(s.recall, 0.5, 1e-15);
  EXPECT_NEAR(s.f1, 0.375, 1e-15);
}

TEST(PrecisionRecallF1, NoHits) {
  const PrfScore s = precision_recall_f1(letters("xyz"), letters("abc"), 3);
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.f1, 0.0);
}

TEST(PrecisionRecallF1, ShortRankingStillDividesByK) {
  const PrfScore s = precision_recall_f1(letters("a"), letters("ab"), 5);
  EXPECT_DOUBLE_EQ(s.precision, 0.2);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
}

TEST(PrecisionRecallF1, Errors) {
  EXPECT_THROW(precision_recall_f1(letters("a"), {}, 5), std::invalid_argument);
  EXPECT_THROW(precision_recall_f1(letters("a"), letters("a"), 0), std::invalid_argument);
}

TEST(AveragePrecision, HandCases) {
  EXPECT_DOUBLE_EQ(average_precision(letters("abc"), letters("abc")), 1.0);
  EXPECT_DOUBLE_EQ(average_precision(letters("xa"), letters("a")), 0.5);
  EXPECT_NEAR(average_precision(letters("axb"), letters("ab")), 5.0 / 6.0, 1e-12);
  EXPECT_EQ(average_precision({}, letters("ab")), 0.0);
  EXPECT_THROW(average_precision(letters("a"), {}), std::invalid_argument);
}

TEST(RankingMetrics, MatchNaiveReference) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> len(0, 20), glen(1, 12), letter(0, 25);
  std::uniform_int_distribution<std::size_t> kdist(1, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    Words ranked, gold;
    for (int i = len(rng); i > 0; --i) {
      std::string w(1, char('a' + letter(rng)));
      if (std::find(ranked.begin(), ranked.end(), w) == ranked.end()) ranked.push_back(w);
    }
    for (int i = glen(rng); i > 0; --i) {
      std::string w(1, char('a' + letter(rng)));
      if (std::find(gold.begin(), gold.end(), w) == gold.end()) gold.push_back(w);
    }
    const std::size_t k = kdist(rng);
    const PrfScore s = precision_recall_f1(ranked, gold, k);
    const oracle::Prf ref = oracle::prf(ranked, gold, k);
    EXPECT_NEAR(s.precision, ref.p, 1e-12);
    EXPECT_NEAR(s.recall, ref.r, 1e-12);
    EXPECT_NEAR(s.f1, ref.f1, 1e-12);
    EXPECT_NEAR(average_precision(ranked, gold), oracle::average_precision(ranked, gold), 1e-12);
  }
}

TEST(Mean, EmptyIsZero) {
  EXPECT_EQ(mean(std::vector<double>{}), 0.0);
  EXPECT_DOUBLE_EQ(mean(std::vector<double>{1, 2, 3}), 2.0);
}

TEST(ClusterQuality, TwoSingletonsHaveZeroH) {
  const std::vector<double> t{0, 0};
  const std::vector<Vector> v{{1, 0}, {0.4, std::sqrt(1 - 0.16)}};
  const auto q = cluster_quality(Partition::singletons(2), t, v, 0.0);
  EXPECT_EQ(q.intra, 0.0);
  EXPECT_NEAR(q.inter, 0.4, 1e-12);
  EXPECT_EQ(q.h, 0.0);
}

TEST(ClusterQuality, PairPlusSingleton) {
  // aff(0,1) = 0.8 inside the pair; the singleton sees 0.1 and 0.2.
  const double a = 0.8, b = 0.1, c = 0.2;
  const Vector x{1, 0, 0};
  const Vector y{a, std::sqrt(1 - a * a), 0};
  const double z2 = (c - a * b) / y[1];
  const Vector z{b, z2, std::sqrt(1 - b * b - z2 * z2)};
  const std::vector<double> t{0, 0, 0};
  const std::vector<Vector> v{x, y, z};
  const auto q = cluster_quality(Partition::from_labels(std::vector<std::size_t>{0, 0, 1}), t, v, 0.0);
  EXPECT_NEAR(q.intra, 0.8, 1e-12);
  EXPECT_NEAR(q.inter, 0.15, 1e-12);
  EXPECT_NEAR(q.h, 0.8 / 0.15, 1e-10);
  EXPECT_NEAR(q.h, 5.333, 5e-4);
}

TEST(ClusterQuality, EqualAffinitiesGiveOne) {
  const std::vector<double> t{0, 0, 0, 0};
  const std::vector<Vector> v(4, Vector{0.3, 0.4});
  const auto q = cluster_quality(Partition::from_labels(std::vector<std::size_t>{0, 0, 1, 1}), t, v, 0.0);
  EXPECT_NEAR(q.h, 1.0, 1e-12);
}

TEST(ClusterQuality, NeedsTwoTopics) {
  const std::vector<double> t{0, 1};
  const std::vector<Vector> v{{1}, {1}};
  EXPECT_THROW(cluster_quality(Partition::from_labels(std::vector<std::size_t>{0, 0}), t, v, 0.1),
               std::domain_error);
}

TEST(ClusterQuality, MatchesBruteForcePairLoops) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> topics(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 60;
    const auto t = oracle::sorted_times(rng, n, 40.0);
    const auto v = oracle::clustered_vectors(rng, n, 5, 3, 0.7);
    std::uniform_int_distribution<std::size_t> pick(0, topics(rng) - 1);
    std::vector<std::size_t> l(n);
    for (auto& x : l) x = pick(rng);
    const Partition part = Partition::from_labels(l);
    if (part.topic_count() < 2) continue;
    const auto q = cluster_quality(part, t, v, 0.14);
    const auto ref = oracle::cluster_quality(l, t, v, 0.14);
    EXPECT_NEAR(q.intra, ref.intra, 1e-9);
    EXPECT_NEAR(q.inter, ref.inter, 1e-9);
    if (std::isfinite(ref.h)) EXPECT_NEAR(q.h, ref.h, 1e-9 * std::max(1.0, std::abs(ref.h)));
  }
}

TEST(Density, BucketsAndLabels) {
  EXPECT_EQ(density_bucket(0.0), 0u);
  EXPECT_EQ(density_bucket(29.999), 0u);
  EXPECT_EQ(density_bucket(30.0), 1u);
  EXPECT_EQ(density_bucket(60.0), 2u);
  EXPECT_EQ(density_bucket(119.9), 3u);
  EXPECT_EQ(density_bucket(120.0), 4u);
  EXPECT_EQ(density_bucket(1e9), 4u);
  EXPECT_EQ(density_bucket_label(4), ">=120");
  EXPECT_DOUBLE_EQ(comment_density(20, 60.0), 20.0);
  EXPECT_DOUBLE_EQ(comment_density(3, 0.0), 180.0);
}

TEST(HHit, CountsWinsPerBucketAndIgnoresTies) {
  const std::vector<HComparison> rows{{2.0, 1.5, 10}, {1.0, 1.0, 10}, {1.0, 3.0, 200}, {4.0, 1.0, 45}};
  const HHitTable t = h_hit(rows);
  EXPECT_EQ(t.dialogue_hits[0], 1u);
  EXPECT_EQ(t.topic_hits[0], 0u);
  EXPECT_EQ(t.videos[0], 2u);
  EXPECT_EQ(t.dialogue_hits[1], 1u);
  EXPECT_EQ(t.topic_hits[4], 1u);
}

}  // namespace
}  // namespace tsctag
