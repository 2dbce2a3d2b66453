#include "tsctag/partition.hpp"

#include <numeric>
#include <unordered_map>

namespace tsctag {

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.assignment_.resize(labels.size());
  std::unordered_map<std::size_t, std::size_t> remap;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = remap.try_emplace(labels[i], p.topics_.size());
    if (inserted) p.topics_.emplace_back();
    p.assignment_[i] = it->second;
    p.topics_[it->second].push_back(i);
  }
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

}  // namespace tsctag
