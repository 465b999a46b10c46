// Incremental (1+epsilon)-approximate max flow.
//
// Two regimes. While the true value is at most the threshold, every insert
// is forwarded to a BoundedMaxFlow run with cutoff threshold+1 and the
// estimate is exact. Beyond that, inserts only bump a staleness counter;
// once epsilon * threshold of them have accumulated the estimate is
// recomputed from scratch with the static solver on the full graph. Unit
// edges raise the max flow by at most one each, so between rebuilds the
// estimate F keeps F <= F* <= (1+epsilon) * F.
//
// Forwarding stops permanently once the bounded structure reports
// threshold+1 (the value never decreases under insertions), so its edge set
// is always a prefix of the full graph and edge ids line up.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "incflow/bounded_maxflow.hpp"
#include "incflow/flow_network.hpp"
#include "incflow/static_maxflow.hpp"

namespace incflow {

struct FrameworkStats {
  std::int64_t inserts = 0;
  std::int64_t forwarded = 0;
  std::int64_t stale = 0;
  int rebuilds = 0;
  std::int64_t bounded_queries = 0;    // internal value() polls, one or two per insert
  std::int64_t static_arc_scans = 0;   // arcs examined by rebuild solves
  BoundedMaxFlow::WorkCounters bounded{};
};

// Threshold suggestion for an insertion stream of known final size:
// round(sqrt(expected_inserts / epsilon)), at least 1. Callers clamp to
// [1, vertex_count].
inline int suggested_threshold(std::int64_t expected_inserts, double epsilon) {
  if (expected_inserts < 1)
    throw std::invalid_argument("expected insert count must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  double raw = std::sqrt(static_cast<double>(expected_inserts) / epsilon);
  return std::max(1, static_cast<int>(std::llround(raw)));
}

class ApproxMaxFlow {
 public:
  ApproxMaxFlow(int vertex_count, VertexId source, VertexId target, double epsilon,
                int threshold)
      : net_(vertex_count, source, target),
        bounded_(vertex_count, source, target,
                 checked_threshold(threshold, vertex_count) + 1),
        epsilon_(checked_epsilon(epsilon)),
        threshold_(threshold) {}

  void insert(VertexId u, VertexId v) {
    net_.insert_edge(u, v);
    ++stats_.inserts;
    ++stats_.bounded_queries;
    if (bounded_.value() <= threshold_) {
      bounded_.insert(u, v);
      ++stats_.bounded_queries;
      estimate_ = bounded_.value();
      witness_from_rebuild_ = false;
      ++stats_.forwarded;
    } else {
      ++stats_.stale;
      ++stale_since_rebuild_;
      if (static_cast<double>(stale_since_rebuild_) >= epsilon_ * threshold_) {
        FlowResult fresh = dinic_max_flow(net_, net_.source(), net_.target());
        stats_.static_arc_scans += fresh.arc_scans;
        estimate_ = fresh.value;
        rebuild_assignment_ = std::move(fresh.assignment);
        witness_from_rebuild_ = true;
        stale_since_rebuild_ = 0;
        ++stats_.rebuilds;
      }
    }
  }

  // The estimate F. O(1); F <= F* <= (1+epsilon) * F once F >= 1.
  int value() const { return estimate_; }

  // A feasible flow of value value() in the current graph: the bounded
  // structure's flow below the threshold, the last rebuild assignment above
  // (still feasible because edges are only ever added).
  std::vector<bool> flow() const {
    std::vector<bool> bits = witness_from_rebuild_ ? rebuild_assignment_ : bounded_.flow();
    bits.resize(static_cast<std::size_t>(net_.edge_count()), false);
    return bits;
  }

  const FlowNetwork& network() const { return net_; }
  double epsilon() const { return epsilon_; }
  int threshold() const { return threshold_; }
  int rebuild_count() const { return stats_.rebuilds; }
  std::int64_t stale_count() const { return stats_.stale; }
  int stale_since_rebuild() const { return stale_since_rebuild_; }

  FrameworkStats stats() const {
    FrameworkStats snapshot = stats_;
    snapshot.bounded = bounded_.work();
    return snapshot;
  }

 private:
  static int checked_threshold(int threshold, int vertex_count) {
    if (threshold < 0 || threshold > vertex_count)
      throw std::invalid_argument("threshold must lie in [0, vertex_count]");
    return threshold;
  }

  static double checked_epsilon(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    return epsilon;
  }

  FlowNetwork net_;  // the full graph, including edges past the threshold
  BoundedMaxFlow bounded_;
  double epsilon_;
  int threshold_;
  int estimate_ = 0;
  int stale_since_rebuild_ = 0;
  bool witness_from_rebuild_ = false;
  std::vector<bool> rebuild_assignment_;
  FrameworkStats stats_;
};

}  // namespace incflow
