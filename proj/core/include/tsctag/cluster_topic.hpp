// Topic-center clustering: best-first agglomeration of topic sets driven by
// a priority queue of (set, best match) pairs.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsctag/embedding.hpp"
#include "tsctag/partition.hpp"

namespace tsctag {

/// A cluster of comments with its cached centroid, start time and mean time.
struct TopicSet {
  std::vector<std::size_t> members;  // sorted comment ids
  Vector center;
  double st = 0.0;  // earliest member timestamp
  double ct = 0.0;  // mean member timestamp

  std::size_t size() const noexcept { return members.size(); }

  static TopicSet singleton(std::size_t id, const Vector& vec, double t);
};

/// cosine(a.center, b.center) * exp(-gamma_t * |b.ct - a.st|).
/// Not symmetric: the time term pairs b's center time with a's start time.
double affinity(const TopicSet& a, const TopicSet& b, double gamma_t);

/// Size-weighted average of centers and center times, min of start times.
/// Throws std::invalid_argument if the member lists overlap.
TopicSet merge_sets(const TopicSet& a, const TopicSet& b);

struct TopicClusterOptions {
  double gamma_t = 0.13;
  double rho_c = 0.38;
  // Skip pushing (i, match_i) when match_i's own best affinity is higher;
  // such a pair can never be the next merge.
  bool greedy_rejection = true;
};

struct TopicMerge {
  std::size_t first = 0;   // set id popped from the queue
  std::size_t second = 0;  // its match
  std::size_t merged = 0;  // id of the new set
  double affinity = 0.0;
};

struct TopicClusterResult {
  Partition partition;
  std::vector<TopicMerge> trace;
  std::vector<TopicSet> final_sets;  // ordered by smallest member
  std::size_t queue_pushes = 0;
  std::size_t rejected_pushes = 0;
};

/// Initial sets take ids 0..N-1 (one per comment); every merge creates a new
/// set with the next unused id. Match ties go to the smallest set id; queue
/// ties to the smallest (i, j).
TopicClusterResult cluster_topic(std::span<const double> times,
                                 std::span<const Vector> vectors,
                                 const TopicClusterOptions& options);

}  // namespace tsctag
