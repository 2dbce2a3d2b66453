#include "tsctag/cluster_topic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tsctag {

TopicSet TopicSet::singleton(std::size_t id, const Vector& vec, double t) {
  return TopicSet{{id}, vec, t, t};
}

double affinity(const TopicSet& a, const TopicSet& b, double gamma_t) {
  return cosine(a.center, b.center) * std::exp(-gamma_t * std::abs(b.ct - a.st));
}

TopicSet merge_sets(const TopicSet& a, const TopicSet& b) {
  if (a.center.size() != b.center.size())
    throw std::invalid_argument("merge_sets: center dimension mismatch");
  TopicSet out;
  out.members.reserve(a.size() + b.size());
  std::merge(a.members.begin(), a.members.end(), b.members.begin(),
             b.members.end(), std::back_inserter(out.members));
  if (std::adjacent_find(out.members.begin(), out.members.end()) !=
      out.members.end())
    throw std::invalid_argument("merge_sets: sets are not disjoint");

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double total = na + nb;
  out.center.resize(a.center.size());
  for (std::size_t k = 0; k < out.center.size(); ++k)
    out.center[k] = (a.center[k] * na + b.center[k] * nb) / total;
  out.st = std::min(a.st, b.st);
  out.ct = (a.ct * na + b.ct * nb) / total;
  return out;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct QueueEntry {
  double val;
  std::size_t i;
  std::size_t j;
  std::uint64_t version;  // version of i's match assignment at push time
};

// Max-heap order: larger val first, then smaller (i, j).
struct EntryLess {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.val != b.val) return a.val < b.val;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

class TopicClusterer {
 public:
  TopicClusterer(std::span<const double> times, std::span<const Vector> vectors,
                 const TopicClusterOptions& options)
      : opt_(options) {
    const std::size_t n = times.size();
    sets_.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) add_set(TopicSet::singleton(i, vectors[i], times[i]));
  }

  TopicClusterResult run() {
    const std::size_t n = sets_.size();
    for (std::size_t i = 0; i < n; ++i) rematch(i);
    for (std::size_t i = 0; i < n; ++i) try_push(i);

    while (!queue_.empty()) {
      const QueueEntry top = queue_.top();
      queue_.pop();
      if (!is_current(top)) continue;
      merge(top);
    }
    return finish();
  }

 private:
  struct Slot {
    TopicSet set;
    double norm = 0.0;
    bool alive = true;
    std::size_t match = kNone;
    double maxval = -std::numeric_limits<double>::infinity();
    std::uint64_t version = 0;
    bool pending = false;  // last push attempt was greedily rejected
    std::vector<std::size_t> matched_by;  // may hold stale ids
  };

  std::size_t add_set(TopicSet set) {
    Slot slot;
    slot.norm = norm(set.center);
    slot.set = std::move(set);
    sets_.push_back(std::move(slot));
    live_.push_back(sets_.size() - 1);
    return sets_.size() - 1;
  }

  double aff(std::size_t a, std::size_t b) const {
    const Slot& sa = sets_[a];
    const Slot& sb = sets_[b];
    double sim = 0.0;
    if (sa.norm != 0.0 && sb.norm != 0.0)
      sim = std::clamp(dot(sa.set.center, sb.set.center) / (sa.norm * sb.norm), -1.0, 1.0);
    return sim * std::exp(-opt_.gamma_t * std::abs(sb.set.ct - sa.set.st));
  }

  void assign(std::size_t u, std::size_t match, double val) {
    Slot& s = sets_[u];
    s.match = match;
    s.maxval = val;
    ++s.version;
    if (match != kNone) sets_[match].matched_by.push_back(u);
  }

  // Best match of u among live sets; ties go to the smallest id.
  void rematch(std::size_t u) {
    std::size_t best = kNone;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t v : live_) {
      if (v == u) continue;
      const double a = aff(u, v);
      if (best == kNone || a > best_val || (a == best_val && v < best)) {
        best = v;
        best_val = a;
      }
    }
    assign(u, best, best_val);
  }

  void try_push(std::size_t u) {
    Slot& s = sets_[u];
    s.pending = false;
    if (s.match == kNone || !(s.maxval > opt_.rho_c)) return;
    if (opt_.greedy_rejection && sets_[s.match].maxval > s.maxval) {
      s.pending = true;
      ++rejected_;
      return;
    }
    queue_.push(QueueEntry{s.maxval, u, s.match, s.version});
    ++pushes_;
  }

  bool is_current(const QueueEntry& e) const {
    return sets_[e.i].alive && sets_[e.j].alive && sets_[e.i].version == e.version;
  }

  void kill(std::size_t id) {
    sets_[id].alive = false;
    live_.erase(std::find(live_.begin(), live_.end(), id));
  }

  void merge(const QueueEntry& e) {
    const std::size_t x = e.i;
    const std::size_t y = e.j;

    // Sets whose match was x or y, and the sets x and y were matched to.
    std::vector<std::size_t> ulist;
    auto collect = [&](std::size_t dead) {
      for (std::size_t u : sets_[dead].matched_by)
        if (sets_[u].alive && sets_[u].match == dead) ulist.push_back(u);
      const std::size_t m = sets_[dead].match;
      if (m != kNone && m != x && m != y && sets_[m].alive) ulist.push_back(m);
    };
    kill(x);
    kill(y);
    collect(x);
    collect(y);
    std::sort(ulist.begin(), ulist.end());
    ulist.erase(std::unique(ulist.begin(), ulist.end()), ulist.end());

    const std::size_t z = add_set(merge_sets(sets_[x].set, sets_[y].set));
    trace_.push_back(TopicMerge{x, y, z, e.val});
    for (std::size_t dead : {x, y}) {
      sets_[dead].matched_by.clear();
      sets_[dead].matched_by.shrink_to_fit();
    }

    std::vector<std::size_t> changed = ulist;
    for (std::size_t u : ulist) rematch(u);

    // One pass over live sets: z's own best match, and sets for which z
    // beats their current match (z has the largest id, so it never wins ties).
    std::size_t best = kNone;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t v : live_) {
      if (v == z) continue;
      const double a = aff(z, v);
      if (best == kNone || a > best_val || (a == best_val && v < best)) {
        best = v;
        best_val = a;
      }
      if (std::binary_search(ulist.begin(), ulist.end(), v)) continue;
      const double back = aff(v, z);
      if (sets_[v].match == kNone || back > sets_[v].maxval) {
        assign(v, z, back);
        changed.push_back(v);
      }
    }
    assign(z, best, best_val);
    changed.push_back(z);

    std::sort(changed.begin(), changed.end());
    for (std::size_t u : changed) try_push(u);

    // Rejected pairs are blocked by their match's maxval; re-check them
    // whenever that maxval changes.
    for (std::size_t j : changed) {
      for (std::size_t u : sets_[j].matched_by) {
        Slot& s = sets_[u];
        if (s.alive && s.pending && s.match == j) try_push(u);
      }
    }
  }

  TopicClusterResult finish() {
    const std::size_t n = sets_.empty() ? 0 : count_comments();
    std::vector<std::size_t> labels(n);
    for (std::size_t id : live_)
      for (std::size_t m : sets_[id].set.members) labels[m] = id;

    TopicClusterResult result;
    result.partition = Partition::from_labels(labels);
    result.trace = std::move(trace_);
    result.queue_pushes = pushes_;
    result.rejected_pushes = rejected_;
    std::vector<std::size_t> live = live_;
    std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
      return sets_[a].set.members.front() < sets_[b].set.members.front();
    });
    for (std::size_t id : live) result.final_sets.push_back(std::move(sets_[id].set));
    return result;
  }

  std::size_t count_comments() const {
    std::size_t n = 0;
    for (std::size_t id : live_) n += sets_[id].set.size();
    return n;
  }

  TopicClusterOptions opt_;
  std::vector<Slot> sets_;
  std::vector<std::size_t> live_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, EntryLess> queue_;
  std::vector<TopicMerge> trace_;
  std::size_t pushes_ = 0;
  std::size_t rejected_ = 0;
};

}  // namespace

TopicClusterResult cluster_topic(std::span<const double> times,
                                 std::span<const Vector> vectors,
                                 const TopicClusterOptions& options) {
  if (times.size() != vectors.size())
    throw std::invalid_argument("cluster_topic: times/vectors size mismatch");
  for (std::size_t i = 1; i < vectors.size(); ++i)
    if (vectors[i].size() != vectors[0].size())
      throw std::invalid_argument("cluster_topic: vector length mismatch");
  return TopicClusterer(times, vectors, options).run();
}

}  // namespace tsctag
