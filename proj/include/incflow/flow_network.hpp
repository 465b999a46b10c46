// Dynamic directed unit-capacity multigraph with a maintained 0/1 flow and
// an incrementally maintained residual-arc adjacency.
//
// Every edge carries either zero or one unit of flow, so it contributes
// exactly one arc to the residual graph at any time: a forward arc
// (tail -> head) while empty, a backward arc (head -> tail) once it carries
// flow. The per-vertex residual lists are updated in O(1) on every flow-bit
// flip instead of being recomputed, which keeps residual_out() an O(1)
// lookup and a full residual enumeration O(m).
//
// Single-writer contract: no internal synchronization. Mutations must be
// serialized by the caller; read-only queries are safe between mutations.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace incflow {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

enum class ArcKind : std::uint8_t { forward, backward };

// One arc of the residual graph, labeled with the edge it came from.
struct ResidualArc {
  VertexId from = -1;
  VertexId to = -1;
  EdgeId edge = -1;
  ArcKind kind = ArcKind::forward;

  friend bool operator==(const ResidualArc&, const ResidualArc&) = default;
};

struct EdgeRecord {
  VertexId tail = -1;
  VertexId head = -1;
  bool flow = false;  // unit capacity: carries 0 or 1

  bool is_self_loop() const { return tail == head; }
};

// Structured result of check_valid(). Capacity bounds hold by representation
// (the flow bit cannot leave {0,1}), so the checkable failures are flow on a
// self-loop, a conservation break at a non-terminal vertex, and a flow value
// counter that disagrees with the net outflow of the source.
struct FlowViolation {
  enum class Kind { self_loop_flow, conservation, value_mismatch };

  Kind kind;
  EdgeId edge = -1;    // set for self_loop_flow
  VertexId vertex = -1;  // set for conservation / value_mismatch

  std::string describe() const {
    switch (kind) {
      case Kind::self_loop_flow:
        return "self-loop edge " + std::to_string(edge) + " carries flow";
      case Kind::conservation:
        return "conservation violated at vertex " + std::to_string(vertex);
      case Kind::value_mismatch:
        return "flow value counter disagrees with net outflow of source";
    }
    return "unknown violation";
  }
};

class FlowNetwork {
 public:
  FlowNetwork(int vertex_count, VertexId source, VertexId target)
      : n_(checked_vertex_count(vertex_count, source, target)),
        source_(source),
        target_(target),
        residual_out_(static_cast<std::size_t>(vertex_count)) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  VertexId source() const { return source_; }
  VertexId target() const { return target_; }

  const EdgeRecord& edge(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
  }

  std::span<const EdgeRecord> edges() const { return edges_; }

  // Appends a new empty edge and returns its id. Ids are dense, assigned in
  // insertion order and never reused. Parallel edges are distinct records;
  // self-loops are accepted but never enter the residual graph.
  EdgeId insert_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(EdgeRecord{u, v, false});
    arc_slot_.push_back(-1);
    if (u != v) place_residual_arc(id);
    return id;
  }

  // Arcs currently leaving v in the residual graph. Order is unspecified;
  // the span is invalidated by the next mutating call.
  std::span<const ResidualArc> residual_out(VertexId v) const {
    check_vertex(v);
    return residual_out_[static_cast<std::size_t>(v)];
  }

  // Pushes one unit along a simple source-to-target residual path: forward
  // arcs get their edge filled, backward arcs get theirs emptied. The whole
  // path is validated against the current flow bits before anything flips.
  void augment(std::span<const ResidualArc> path) {
    validate_path(path);
    for (const ResidualArc& arc : path) flip(arc.edge);
    ++value_;
  }

  // Number of successful augmentations; equals outflow(source) -
  // inflow(source) for any state reached through augment alone.
  int flow_value() const { return value_; }

  std::vector<bool> flow_assignment() const {
    std::vector<bool> bits(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) bits[i] = edges_[i].flow;
    return bits;
  }

  // Test support: force a flow bit, bypassing augmentation bookkeeping. The
  // residual index stays in sync; the value counter does not.
  void set_flow(EdgeId e, bool carry) {
    check_edge(e);
    EdgeRecord& rec = edges_[static_cast<std::size_t>(e)];
    if (rec.flow == carry) return;
    if (!rec.is_self_loop()) remove_residual_arc(e);
    rec.flow = carry;
    if (!rec.is_self_loop()) place_residual_arc(e);
  }

  std::optional<FlowViolation> check_valid() const {
    for (EdgeId e = 0; e < edge_count(); ++e) {
      const EdgeRecord& rec = edges_[static_cast<std::size_t>(e)];
      if (rec.is_self_loop() && rec.flow)
        return FlowViolation{FlowViolation::Kind::self_loop_flow, e, rec.tail};
    }
    std::vector<std::int64_t> net_out(static_cast<std::size_t>(n_), 0);
    for (const EdgeRecord& rec : edges_) {
      if (rec.flow) {
        ++net_out[static_cast<std::size_t>(rec.tail)];
        --net_out[static_cast<std::size_t>(rec.head)];
      }
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (v != source_ && v != target_ && net_out[static_cast<std::size_t>(v)] != 0)
        return FlowViolation{FlowViolation::Kind::conservation, -1, v};
    }
    if (net_out[static_cast<std::size_t>(source_)] != value_ || value_ < 0)
      return FlowViolation{FlowViolation::Kind::value_mismatch, -1, source_};
    return std::nullopt;
  }

 private:
  static int checked_vertex_count(int n, VertexId s, VertexId t) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive");
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw std::invalid_argument("source/target out of range");
    if (s == t) throw std::invalid_argument("source and target must differ");
    return n;
  }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }

  void check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge id out of range");
  }

  // The live residual arc of edge e sits in residual_out_[owner] at
  // arc_slot_[e]; removal swaps with the last element so both stay O(1).
  void place_residual_arc(EdgeId e) {
    const EdgeRecord& rec = edges_[static_cast<std::size_t>(e)];
    ResidualArc arc = rec.flow
                          ? ResidualArc{rec.head, rec.tail, e, ArcKind::backward}
                          : ResidualArc{rec.tail, rec.head, e, ArcKind::forward};
    auto& list = residual_out_[static_cast<std::size_t>(arc.from)];
    arc_slot_[static_cast<std::size_t>(e)] = static_cast<std::int32_t>(list.size());
    list.push_back(arc);
  }

  void remove_residual_arc(EdgeId e) {
    const EdgeRecord& rec = edges_[static_cast<std::size_t>(e)];
    VertexId owner = rec.flow ? rec.head : rec.tail;
    auto& list = residual_out_[static_cast<std::size_t>(owner)];
    std::int32_t slot = arc_slot_[static_cast<std::size_t>(e)];
    list[static_cast<std::size_t>(slot)] = list.back();
    arc_slot_[static_cast<std::size_t>(list[static_cast<std::size_t>(slot)].edge)] = slot;
    list.pop_back();
    arc_slot_[static_cast<std::size_t>(e)] = -1;
  }

  void flip(EdgeId e) {
    remove_residual_arc(e);
    edges_[static_cast<std::size_t>(e)].flow = !edges_[static_cast<std::size_t>(e)].flow;
    place_residual_arc(e);
  }

  void validate_path(std::span<const ResidualArc> path) const {
    if (path.empty() || path.front().from != source_ || path.back().to != target_)
      throw std::invalid_argument("augmenting path must run from source to target");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    VertexId cursor = source_;
    for (const ResidualArc& arc : path) {
      if (arc.edge < 0 || arc.edge >= edge_count())
        throw std::invalid_argument("path references an unknown edge");
      const EdgeRecord& rec = edges_[static_cast<std::size_t>(arc.edge)];
      bool consistent =
          arc.kind == ArcKind::forward
              ? (!rec.flow && arc.from == rec.tail && arc.to == rec.head)
              : (rec.flow && arc.from == rec.head && arc.to == rec.tail);
      if (!consistent)
        throw std::invalid_argument("path arc inconsistent with current flow bits");
      if (arc.from != cursor) throw std::invalid_argument("path arcs do not chain");
      if (seen[static_cast<std::size_t>(arc.from)])
        throw std::invalid_argument("path revisits a vertex");
      seen[static_cast<std::size_t>(arc.from)] = 1;
      cursor = arc.to;
    }
    if (seen[static_cast<std::size_t>(target_)])
      throw std::invalid_argument("path revisits the target");
  }

  int n_;
  VertexId source_;
  VertexId target_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<ResidualArc>> residual_out_;
  std::vector<std::int32_t> arc_slot_;  // per edge: index in its owner's list, -1 if absent
  int value_ = 0;
};

}  // namespace incflow
