#include "tsctag/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace tsctag {

PrfScore precision_recall_f1(std::span<const std::string> ranked,
                             std::span<const std::string> gold, std::size_t k) {
  if (gold.empty()) throw std::invalid_argument("precision_recall_f1: empty gold");
  if (k == 0) throw std::invalid_argument("precision_recall_f1: k must be >= 1");
  const std::unordered_set<std::string_view> gold_set(gold.begin(), gold.end());
  std::unordered_set<std::string_view> counted;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < std::min(k, ranked.size()); ++r)
    if (gold_set.contains(ranked[r]) && counted.insert(ranked[r]).second) ++hits;

  PrfScore s;
  s.precision = static_cast<double>(hits) / static_cast<double>(k);
  s.recall = static_cast<double>(hits) / static_cast<double>(gold_set.size());
  if (s.precision + s.recall > 0.0)
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

double average_precision(std::span<const std::string> ranked,
                         std::span<const std::string> gold) {
  if (gold.empty()) throw std::invalid_argument("average_precision: empty gold");
  const std::unordered_set<std::string_view> gold_set(gold.begin(), gold.end());
  std::unordered_set<std::string_view> found;
  double sum = 0.0;
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    if (!gold_set.contains(ranked[r]) || !found.insert(ranked[r]).second) continue;
    sum += static_cast<double>(found.size()) / static_cast<double>(r + 1);
  }
  return sum / static_cast<double>(gold_set.size());
}

double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double comment_affinity(std::span<const double> vec_i, double t_i,
                        std::span<const double> vec_j, double t_j,
                        double gamma_t) {
  return cosine(vec_i, vec_j) * std::exp(-gamma_t * std::abs(t_j - t_i));
}

ClusterQuality cluster_quality(const Partition& partition,
                               std::span<const double> times,
                               std::span<const Vector> vectors, double gamma_t) {
  const std::size_t n = partition.comment_count();
  if (times.size() != n || vectors.size() != n)
    throw std::invalid_argument("cluster_quality: size mismatch");
  const std::size_t k = partition.topic_count();
  if (k < 2) throw std::domain_error("cluster_quality: needs at least two topics");

  // Unit vectors turn every cosine into a dot product; zero vectors stay 0.
  std::vector<Vector> unit(vectors.begin(), vectors.end());
  for (auto& v : unit) {
    const double nv = norm(v);
    if (nv > 0.0)
      for (double& x : v) x /= nv;
  }

  std::size_t cohesive_topics = 0;
  for (std::size_t t = 0; t < k; ++t)
    if (partition.topic_size(t) >= 2) ++cohesive_topics;

  // Each comment pair contributes to exactly one per-topic (or per-topic-
  // pair) mean, so both averages are sums of per-pair terms.
  double intra_sum = 0.0;
  double inter_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ti = partition.topic_of(i);
    const double si = static_cast<double>(partition.topic_size(ti));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sim = std::clamp(dot(unit[i], unit[j]), -1.0, 1.0);
      const double a = sim * std::exp(-gamma_t * std::abs(times[j] - times[i]));
      const std::size_t tj = partition.topic_of(j);
      if (ti == tj) {
        intra_sum += 2.0 * a / (si * (si - 1.0));
      } else {
        const double sj = static_cast<double>(partition.topic_size(tj));
        inter_sum += a / (si * sj);
      }
    }
  }

  ClusterQuality q;
  q.intra = cohesive_topics == 0 ? 0.0 : intra_sum / static_cast<double>(cohesive_topics);
  // Unordered topic pairs counted once; ordered pairs double both sides.
  q.inter = 2.0 * inter_sum / (static_cast<double>(k) * static_cast<double>(k - 1));
  if (q.inter > 0.0)
    q.h = q.intra / q.inter;
  else
    q.h = q.intra > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return q;
}

std::size_t density_bucket(double comments_per_minute) {
  if (comments_per_minute < 30.0) return 0;
  if (comments_per_minute < 60.0) return 1;
  if (comments_per_minute < 90.0) return 2;
  if (comments_per_minute < 120.0) return 3;
  return 4;
}

std::string_view density_bucket_label(std::size_t bucket) {
  static constexpr std::array<std::string_view, kDensityBuckets> kLabels = {
      "0-30", "30-60", "60-90", "90-120", ">=120"};
  return kLabels.at(bucket);
}

double comment_density(std::size_t comment_count, double duration_seconds) {
  return static_cast<double>(comment_count) / (std::max(duration_seconds, 1.0) / 60.0);
}

HHitTable h_hit(std::span<const HComparison> videos) {
  HHitTable table;
  for (const auto& v : videos) {
    const std::size_t b = density_bucket(v.density);
    ++table.videos[b];
    if (v.dialogue_h > v.topic_h)
      ++table.dialogue_hits[b];
    else if (v.topic_h > v.dialogue_h)
      ++table.topic_hits[b];
  }
  return table;
}

}  // namespace tsctag
