// Topic popularity and the two-phase influence iteration over the
// intra-topic part of the graph.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tsctag/partition.hpp"
#include "tsctag/sag.hpp"

namespace tsctag {

/// P_i = |topic(i)| / geometric_mean(topic sizes), computed in log space.
std::vector<double> popularity(const Partition& partition);

/// Sparse influence matrix: the graph's edges restricted to pairs in the same
/// topic. Row i lists (j, m_ij) with j > i; column lists mirror them.
class InfluenceMatrix {
 public:
  struct Entry {
    NodeId other;
    double w;
  };

  InfluenceMatrix() = default;
  InfluenceMatrix(std::size_t n, std::span<const Edge> intra_edges);

  std::size_t size() const noexcept { return n_; }
  std::size_t nonzeros() const noexcept { return out_.size(); }
  /// Entries m_{i,j} for j > i.
  std::span<const Entry> row(NodeId i) const;
  /// Entries m_{j,i} for j < i.
  std::span<const Entry> column(NodeId i) const;
  /// m_{i,j}, or 0 when absent.
  double at(NodeId i, NodeId j) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<Entry> out_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<Entry> in_;
};

InfluenceMatrix influence_matrix(const Sag& graph, const Partition& partition);

struct InfluenceResult {
  std::vector<double> values;
  int turns = 0;           // turns actually executed
  bool converged = false;  // stopped on the tolerance rather than the cap
  double last_change = 0;  // mean relative change of the final turn
};

/// Called after every even (normalization) phase with the turn number
/// (1-based) and the current values.
using InfluenceObserver = std::function<void(int, std::span<const double>)>;

/// Runs up to `turns` turns starting from I = 1. A turn is an amplify pass
/// (i from last to first: I_i += Σ_{j>i} m_ij I_j) followed by a normalize
/// pass (i from first to last: I_i /= I_i + Σ_{j<i} m_ji I_j). Stops early
/// once the mean of |ΔI_i| / I_i over one turn drops below `tol`.
InfluenceResult iterate_influence(const InfluenceMatrix& matrix, int turns,
                                  double tol,
                                  const InfluenceObserver& observer = {});

/// W_i = P_i * I_i.
std::vector<double> comment_weights(std::span<const double> popularity,
                                    std::span<const double> influence);

}  // namespace tsctag
