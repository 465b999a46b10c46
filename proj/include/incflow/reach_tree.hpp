// Incremental single-source reachability.
//
// Maintains a rooted out-tree over inserted arcs so that membership answers
// "is v reachable from the root" in O(1). When an arc lands with its tail in
// the tree and its head outside, the head is attached and its stored
// out-arcs are re-examined, cascading breadth-first. Each stored arc is
// examined at most twice over the tree's lifetime (once on insertion, once
// when its tail joins the tree), so total update work is bounded by
// 2 * inserted_arc_count + initial_arc_count examinations.
//
// Arc labels are opaque payloads handed back verbatim by extract_path; the
// flow layers store ResidualArc values there so a tree path doubles as an
// augmenting path. Label must be default-constructible and copyable.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "incflow/flow_network.hpp"

namespace incflow {

template <typename Label>
class ReachTree {
 public:
  struct Arc {
    VertexId from;
    VertexId to;
    Label label;
  };

  ReachTree(int vertex_count, VertexId root)
      : n_(vertex_count),
        root_(root),
        in_tree_(static_cast<std::size_t>(checked(vertex_count, root)), 0),
        parent_(static_cast<std::size_t>(vertex_count), -1),
        parent_label_(static_cast<std::size_t>(vertex_count)),
        arc_store_(static_cast<std::size_t>(vertex_count)) {
    in_tree_[static_cast<std::size_t>(root)] = 1;
  }

  // Builds the tree over a pre-existing arc set by storing every arc and
  // then searching from the root. Equivalent to an empty tree followed by
  // insert_arc of each arc, in any order.
  ReachTree(int vertex_count, VertexId root, std::span<const Arc> arcs)
      : ReachTree(vertex_count, root) {
    for (const Arc& arc : arcs) {
      check_vertex(arc.from);
      check_vertex(arc.to);
      arc_store_[static_cast<std::size_t>(arc.from)].emplace_back(arc.to, arc.label);
    }
    initial_arcs_ = static_cast<std::int64_t>(arcs.size());
    queue_.push_back(root_);
    drain_queue();
  }

  void insert_arc(VertexId from, VertexId to, Label label) {
    check_vertex(from);
    check_vertex(to);
    auto& stored = arc_store_[static_cast<std::size_t>(from)];
    stored.emplace_back(to, std::move(label));
    ++inserted_arcs_;
    ++update_tree_calls_;
    if (in_tree_[static_cast<std::size_t>(from)] && !in_tree_[static_cast<std::size_t>(to)]) {
      attach(to, from, stored.back().second);
      queue_.push_back(to);
      drain_queue();
    }
  }

  // O(1) worst case; never mutates.
  bool reaches(VertexId v) const {
    check_vertex(v);
    return in_tree_[static_cast<std::size_t>(v)] != 0;
  }

  int reachable_count() const { return tree_size_; }

  // Labels of the tree path root -> v, in path order. Empty for the root.
  std::vector<Label> extract_path(VertexId v) const {
    if (!reaches(v)) throw std::invalid_argument("vertex not reachable from root");
    std::vector<Label> labels;
    int steps = 0;
    for (VertexId cur = v; cur != root_; cur = parent_[static_cast<std::size_t>(cur)]) {
      labels.push_back(parent_label_[static_cast<std::size_t>(cur)]);
      assert(++steps < n_);
    }
    (void)steps;
    std::reverse(labels.begin(), labels.end());
    return labels;
  }

  std::int64_t update_tree_calls() const { return update_tree_calls_; }
  std::int64_t initial_arc_count() const { return initial_arcs_; }
  std::int64_t inserted_arc_count() const { return inserted_arcs_; }

 private:
  static int checked(int n, VertexId root) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive");
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    return n;
  }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }

  void attach(VertexId v, VertexId parent, const Label& label) {
    in_tree_[static_cast<std::size_t>(v)] = 1;
    parent_[static_cast<std::size_t>(v)] = parent;
    parent_label_[static_cast<std::size_t>(v)] = label;
    ++tree_size_;
  }

  // Breadth-first cascade: scan the stored out-arcs of every freshly
  // attached vertex. Arcs stored after a vertex was scanned are covered by
  // their own insert_arc examination.
  void drain_queue() {
    std::size_t head = 0;
    while (head < queue_.size()) {
      VertexId v = queue_[head++];
      for (const auto& [to, label] : arc_store_[static_cast<std::size_t>(v)]) {
        ++update_tree_calls_;
        if (!in_tree_[static_cast<std::size_t>(to)]) {
          attach(to, v, label);
          queue_.push_back(to);
        }
      }
    }
    queue_.clear();
  }

  int n_;
  VertexId root_;
  int tree_size_ = 1;
  std::vector<char> in_tree_;
  std::vector<VertexId> parent_;
  std::vector<Label> parent_label_;
  std::vector<std::vector<std::pair<VertexId, Label>>> arc_store_;
  std::vector<VertexId> queue_;  // scratch for cascades
  std::int64_t update_tree_calls_ = 0;
  std::int64_t initial_arcs_ = 0;
  std::int64_t inserted_arcs_ = 0;
};

}  // namespace incflow
