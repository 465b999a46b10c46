// Incremental exact max flow while the value stays within a cutoff.
//
// Work proceeds in rounds (epochs): a reachability tree over the current
// residual graph absorbs each inserted edge's forward arc; the round ends
// when the target becomes reachable. The tree path is then an augmenting
// path, one unit is pushed, and the tree is rebuilt from the full residual
// arc set of the new flow. Each round costs O(m) tree work, and there are at
// most cutoff+2 rounds, which keeps the instrumented total within
// 4 * m * (cutoff + 2) arc scans.
//
// Once the value reaches cutoff+1 the structure is saturated: the value
// freezes as the "at least cutoff+1" signal and later inserts are dropped
// without being recorded. Callers that need the full edge set keep their
// own graph.

#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "incflow/flow_network.hpp"
#include "incflow/reach_tree.hpp"

namespace incflow {

class BoundedMaxFlow {
 public:
  struct WorkCounters {
    std::int64_t residual_arc_scans = 0;  // reinit enumerations + tree examinations
    int tree_rebuilds = 0;
  };

  struct EpochStats {
    std::int64_t initial_arcs = 0;   // residual arcs fed to the tree at epoch start
    std::int64_t inserted_arcs = 0;  // arcs inserted into the tree during the epoch
    std::int64_t update_tree_calls = 0;
  };

  BoundedMaxFlow(int vertex_count, VertexId source, VertexId target, int cutoff)
      : net_(vertex_count, source, target),
        cutoff_(checked_cutoff(cutoff)),
        tree_(vertex_count, source) {}

  // Ignored entirely once saturated; the dropped edge is not recorded here.
  void insert(VertexId u, VertexId v) {
    if (saturated_) return;
    EdgeId e = net_.insert_edge(u, v);
    if (u != v) tree_.insert_arc(u, v, ResidualArc{u, v, e, ArcKind::forward});
    if (tree_.reaches(net_.target())) {
      std::vector<ResidualArc> path = tree_.extract_path(net_.target());
      net_.augment(path);
      ++value_;
      rebuild_tree();
      assert(!tree_.reaches(net_.target()));
      if (value_ > cutoff_) saturated_ = true;
    }
  }

  // Exact max flow of the accepted insertions while <= cutoff; cutoff+1
  // signals "true value is at least cutoff+1". O(1).
  int value() const { return value_; }

  bool saturated() const { return saturated_; }
  int cutoff() const { return cutoff_; }

  std::vector<bool> flow() const { return net_.flow_assignment(); }
  const FlowNetwork& network() const { return net_; }

  WorkCounters work() const {
    WorkCounters w = completed_work_;
    w.residual_arc_scans += tree_.initial_arc_count() + tree_.update_tree_calls();
    return w;
  }

  std::span<const EpochStats> completed_epochs() const { return epochs_; }

  EpochStats current_epoch() const {
    return EpochStats{tree_.initial_arc_count(), tree_.inserted_arc_count(),
                      tree_.update_tree_calls()};
  }

 private:
  static int checked_cutoff(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
    return cutoff;
  }

  // New round: snapshot the residual arc set and search it from scratch.
  void rebuild_tree() {
    epochs_.push_back(current_epoch());
    completed_work_.residual_arc_scans +=
        tree_.initial_arc_count() + tree_.update_tree_calls();
    ++completed_work_.tree_rebuilds;

    std::vector<ReachTree<ResidualArc>::Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(net_.edge_count()));
    for (VertexId v = 0; v < net_.vertex_count(); ++v) {
      for (const ResidualArc& arc : net_.residual_out(v))
        arcs.push_back({arc.from, arc.to, arc});
    }
    tree_ = ReachTree<ResidualArc>(net_.vertex_count(), net_.source(), arcs);
  }

  FlowNetwork net_;
  int cutoff_;
  int value_ = 0;
  bool saturated_ = false;
  ReachTree<ResidualArc> tree_;
  WorkCounters completed_work_;
  std::vector<EpochStats> epochs_;
};

}  // namespace incflow
