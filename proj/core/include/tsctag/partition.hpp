#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

namespace tsctag {

/// Assignment of every comment to exactly one topic. Topic ids are
/// canonical: topics are numbered in order of their smallest member, and
/// member lists are sorted, so two equal groupings compare equal.
class Partition {
 public:
  Partition() = default;

  /// Builds a canonical partition from arbitrary per-comment labels.
  static Partition from_labels(std::span<const std::size_t> labels);
  static Partition singletons(std::size_t n);

  std::size_t comment_count() const noexcept { return assignment_.size(); }
  std::size_t topic_count() const noexcept { return topics_.size(); }
  std::size_t topic_of(std::size_t comment) const { return assignment_[comment]; }
  std::span<const std::size_t> members(std::size_t topic) const { return topics_[topic]; }
  std::span<const std::size_t> assignment() const noexcept { return assignment_; }
  std::size_t topic_size(std::size_t topic) const { return topics_[topic].size(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.assignment_ == b.assignment_;
  }

  /// Prints the assignment, e.g. "[0 0 1]".
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '[';
    for (std::size_t i = 0; i < p.assignment_.size(); ++i) os << (i ? " " : "") << p.assignment_[i];
    return os << ']';
  }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> topics_;
};

}  // namespace tsctag
