// Ranking metrics, clustering quality and density buckets.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsctag/embedding.hpp"
#include "tsctag/partition.hpp"

namespace tsctag {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// hits = |top-k ∩ gold|, p = hits / k, r = hits / |gold|.
/// Throws std::invalid_argument on empty gold or k == 0.
PrfScore precision_recall_f1(std::span<const std::string> ranked,
                             std::span<const std::string> gold, std::size_t k);

/// (1/|gold|) Σ precision@rank over the ranks where a gold item appears.
/// Throws std::invalid_argument on empty gold.
double average_precision(std::span<const std::string> ranked,
                         std::span<const std::string> gold);

double mean(std::span<const double> values);

struct ClusterQuality {
  double intra = 0.0;  // mean intra-topic affinity over topics of size >= 2
  double inter = 0.0;  // mean cross-topic affinity over ordered topic pairs
  double h = 0.0;      // intra / inter
};

/// Comment-level affinity cosine(vec_i, vec_j) * exp(-gamma_t |t_j - t_i|).
double comment_affinity(std::span<const double> vec_i, double t_i,
                        std::span<const double> vec_j, double t_j,
                        double gamma_t);

/// Cohesion/separation of a partition in one O(N^2) pass over comment
/// pairs. Singleton topics contribute nothing to `intra` (0 when no topic
/// has two members). When `inter` is not positive, `h` is +inf if `intra`
/// is positive and 0 otherwise. Throws std::domain_error with fewer than
/// two topics.
ClusterQuality cluster_quality(const Partition& partition,
                               std::span<const double> times,
                               std::span<const Vector> vectors, double gamma_t);

/// Density buckets in comments per minute: [0,30) [30,60) [60,90) [90,120)
/// [120,inf).
inline constexpr std::size_t kDensityBuckets = 5;
std::size_t density_bucket(double comments_per_minute);
std::string_view density_bucket_label(std::size_t bucket);

/// Comments per minute over `duration_seconds` (floored at one second).
double comment_density(std::size_t comment_count, double duration_seconds);

struct HComparison {
  double dialogue_h = 0.0;
  double topic_h = 0.0;
  double density = 0.0;
};

struct HHitTable {
  std::array<std::size_t, kDensityBuckets> dialogue_hits{};
  std::array<std::size_t, kDensityBuckets> topic_hits{};
  std::array<std::size_t, kDensityBuckets> videos{};
};

/// Per bucket, counts videos where the dialogue clusterer has the larger H
/// (D-Hit) and where the topic-center clusterer does (T-Hit). Equal H is a
/// hit for neither.
HHitTable h_hit(std::span<const HComparison> videos);

}  // namespace tsctag
