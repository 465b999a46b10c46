// Static exact max-flow solvers over a network snapshot.
//
// dinic_max_flow is the production solver (BFS level graph + blocking flow,
// O(m * sqrt(m)) arc scans on unit-capacity multigraphs). edmonds_karp is the
// deliberately plain shortest-augmenting-path reference kept as an
// independent cross-check oracle. Both treat the snapshot as a bare graph:
// current flow bits are ignored and the input is never mutated.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "incflow/flow_network.hpp"

namespace incflow {

struct FlowResult {
  int value = 0;
  std::vector<bool> assignment;  // per EdgeId of the input snapshot
  std::int64_t arc_scans = 0;    // instrumentation: arcs examined while solving
};

namespace detail {

// Paired-arc residual arrays: arc 2e is edge e tail->head with capacity 1,
// arc 2e+1 its reverse with capacity 0. Self-loops get capacity 0 on both
// sides so assignments stay aligned by EdgeId.
struct PairedArcs {
  std::vector<VertexId> to;
  std::vector<std::int8_t> cap;
  std::vector<std::vector<std::int32_t>> adj;

  explicit PairedArcs(const FlowNetwork& net)
      : adj(static_cast<std::size_t>(net.vertex_count())) {
    to.reserve(2 * net.edges().size());
    cap.reserve(2 * net.edges().size());
    for (const EdgeRecord& rec : net.edges()) {
      std::int32_t a = static_cast<std::int32_t>(to.size());
      to.push_back(rec.head);
      cap.push_back(rec.is_self_loop() ? 0 : 1);
      to.push_back(rec.tail);
      cap.push_back(0);
      if (!rec.is_self_loop()) {
        adj[static_cast<std::size_t>(rec.tail)].push_back(a);
        adj[static_cast<std::size_t>(rec.head)].push_back(a + 1);
      }
    }
  }

  VertexId tail_of(std::int32_t arc) const { return to[static_cast<std::size_t>(arc ^ 1)]; }

  std::vector<bool> assignment(const FlowNetwork& net) const {
    std::vector<bool> bits(net.edges().size(), false);
    for (std::size_t e = 0; e < net.edges().size(); ++e) {
      if (!net.edges()[e].is_self_loop()) bits[e] = cap[2 * e] == 0;
    }
    return bits;
  }
};

inline void check_terminals(const FlowNetwork& net, VertexId s, VertexId t) {
  if (s < 0 || s >= net.vertex_count() || t < 0 || t >= net.vertex_count())
    throw std::invalid_argument("terminal out of range");
  if (s == t) throw std::invalid_argument("source and target must differ");
}

}  // namespace detail

inline FlowResult dinic_max_flow(const FlowNetwork& net, VertexId s, VertexId t) {
  detail::check_terminals(net, s, t);
  detail::PairedArcs g(net);
  const int n = net.vertex_count();
  FlowResult result;

  std::vector<std::int32_t> level(static_cast<std::size_t>(n));
  std::vector<std::int32_t> ptr(static_cast<std::size_t>(n));
  std::vector<VertexId> bfs;
  bfs.reserve(static_cast<std::size_t>(n));
  std::vector<std::int32_t> path;

  while (true) {
    // Level graph over positive-capacity arcs.
    std::fill(level.begin(), level.end(), -1);
    level[static_cast<std::size_t>(s)] = 0;
    bfs.clear();
    bfs.push_back(s);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      VertexId u = bfs[head];
      for (std::int32_t a : g.adj[static_cast<std::size_t>(u)]) {
        ++result.arc_scans;
        VertexId w = g.to[static_cast<std::size_t>(a)];
        if (g.cap[static_cast<std::size_t>(a)] > 0 && level[static_cast<std::size_t>(w)] < 0) {
          level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(u)] + 1;
          bfs.push_back(w);
        }
      }
    }
    if (level[static_cast<std::size_t>(t)] < 0) break;

    // Blocking flow, advance/retreat with the current-arc pointers. Unit
    // capacities saturate the whole path, so every augmentation restarts
    // from the source.
    std::fill(ptr.begin(), ptr.end(), 0);
    VertexId cur = s;
    path.clear();
    while (true) {
      if (cur == t) {
        for (std::int32_t a : path) {
          g.cap[static_cast<std::size_t>(a)] -= 1;
          g.cap[static_cast<std::size_t>(a ^ 1)] += 1;
        }
        ++result.value;
        path.clear();
        cur = s;
        continue;
      }
      bool advanced = false;
      auto& arcs = g.adj[static_cast<std::size_t>(cur)];
      while (ptr[static_cast<std::size_t>(cur)] < static_cast<std::int32_t>(arcs.size())) {
        std::int32_t a = arcs[static_cast<std::size_t>(ptr[static_cast<std::size_t>(cur)])];
        ++result.arc_scans;
        VertexId w = g.to[static_cast<std::size_t>(a)];
        if (g.cap[static_cast<std::size_t>(a)] > 0 &&
            level[static_cast<std::size_t>(w)] == level[static_cast<std::size_t>(cur)] + 1) {
          path.push_back(a);
          cur = w;
          advanced = true;
          break;
        }
        ++ptr[static_cast<std::size_t>(cur)];
      }
      if (advanced) continue;
      if (cur == s) break;  // phase exhausted
      std::int32_t back = path.back();
      path.pop_back();
      cur = g.tail_of(back);
      ++ptr[static_cast<std::size_t>(cur)];  // the arc led to a dead end
    }
  }

  result.assignment = g.assignment(net);
  return result;
}

// Shortest-augmenting-path reference solver; kept maximally simple.
inline FlowResult edmonds_karp(const FlowNetwork& net, VertexId s, VertexId t) {
  detail::check_terminals(net, s, t);
  detail::PairedArcs g(net);
  const int n = net.vertex_count();
  FlowResult result;

  std::vector<std::int32_t> parent_arc(static_cast<std::size_t>(n));
  std::vector<VertexId> bfs;
  bfs.reserve(static_cast<std::size_t>(n));

  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[static_cast<std::size_t>(s)] = -2;
    bfs.clear();
    bfs.push_back(s);
    bool found = false;
    for (std::size_t head = 0; head < bfs.size() && !found; ++head) {
      VertexId u = bfs[head];
      for (std::int32_t a : g.adj[static_cast<std::size_t>(u)]) {
        ++result.arc_scans;
        VertexId w = g.to[static_cast<std::size_t>(a)];
        if (g.cap[static_cast<std::size_t>(a)] > 0 && parent_arc[static_cast<std::size_t>(w)] == -1) {
          parent_arc[static_cast<std::size_t>(w)] = a;
          if (w == t) {
            found = true;
            break;
          }
          bfs.push_back(w);
        }
      }
    }
    if (!found) break;
    for (VertexId v = t; v != s;) {
      std::int32_t a = parent_arc[static_cast<std::size_t>(v)];
      g.cap[static_cast<std::size_t>(a)] -= 1;
      g.cap[static_cast<std::size_t>(a ^ 1)] += 1;
      v = g.tail_of(a);
    }
    ++result.value;
  }

  result.assignment = g.assignment(net);
  return result;
}

// Optimality certificate: a valid flow is maximum iff the residual graph of
// the assignment has no source-to-target path. Throws std::invalid_argument
// if the assignment is not a valid flow, which is reported distinctly from a
// plain "not optimal" result.
inline bool verify_optimal(const FlowNetwork& net, const std::vector<bool>& assignment,
                           VertexId s, VertexId t) {
  detail::check_terminals(net, s, t);
  if (static_cast<int>(assignment.size()) != net.edge_count())
    throw std::invalid_argument("assignment size does not match edge count");

  const int n = net.vertex_count();
  std::vector<std::int64_t> net_out(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    if (!assignment[e]) continue;
    const EdgeRecord& rec = net.edges()[e];
    if (rec.is_self_loop())
      throw std::invalid_argument("assignment puts flow on a self-loop");
    ++net_out[static_cast<std::size_t>(rec.tail)];
    --net_out[static_cast<std::size_t>(rec.head)];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != s && v != t && net_out[static_cast<std::size_t>(v)] != 0)
      throw std::invalid_argument("assignment violates conservation at vertex " +
                                  std::to_string(v));
  }

  std::vector<std::vector<VertexId>> res_adj(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    const EdgeRecord& rec = net.edges()[e];
    if (rec.is_self_loop()) continue;
    if (assignment[e])
      res_adj[static_cast<std::size_t>(rec.head)].push_back(rec.tail);
    else
      res_adj[static_cast<std::size_t>(rec.tail)].push_back(rec.head);
  }
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{s};
  visited[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    if (u == t) return false;
    for (VertexId w : res_adj[static_cast<std::size_t>(u)]) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace incflow
