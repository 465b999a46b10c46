#include "incflow/flow_network.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "incflow/static_maxflow.hpp"
#include "test_support.hpp"

namespace incflow {
namespace {

TEST(FlowNetwork, ConstructionBasics) {
  FlowNetwork net(2, 0, 1);
  EXPECT_EQ(net.flow_value(), 0);
  EXPECT_EQ(net.edge_count(), 0);

  FlowNetwork reversed(5, 4, 0);
  EXPECT_EQ(reversed.flow_value(), 0);

  EXPECT_THROW(FlowNetwork(1, 0, 0), std::invalid_argument);
  EXPECT_THROW(FlowNetwork(3, 1, 1), std::invalid_argument);
  EXPECT_THROW(FlowNetwork(3, 0, 3), std::invalid_argument);
  EXPECT_THROW(FlowNetwork(3, -1, 2), std::invalid_argument);
}

TEST(FlowNetwork, InsertEdgeAssignsDenseIds) {
  FlowNetwork net(4, 0, 3);
  EXPECT_EQ(net.insert_edge(0, 1), 0);
  EXPECT_EQ(net.insert_edge(0, 1), 1);  // parallel edges are distinct records
  EXPECT_EQ(net.insert_edge(2, 2), 2);  // self-loop accepted
  EXPECT_EQ(net.edge_count(), 3);
  EXPECT_TRUE(net.edge(2).is_self_loop());
  EXPECT_EQ(net.flow_value(), 0);
  EXPECT_THROW(net.insert_edge(0, 4), std::invalid_argument);
  EXPECT_THROW(net.insert_edge(-1, 0), std::invalid_argument);
}

TEST(FlowNetwork, SelfLoopNeverEntersResidual) {
  FlowNetwork net(3, 0, 2);
  net.insert_edge(1, 1);
  EXPECT_TRUE(net.residual_out(1).empty());
}

TEST(FlowNetwork, ResidualOutMatchesDefinition) {
  // s=0, a=1, t=2
  FlowNetwork net(3, 0, 2);
  EdgeId sa = net.insert_edge(0, 1);
  ASSERT_EQ(net.residual_out(0).size(), 1u);
  EXPECT_EQ(net.residual_out(0)[0], (ResidualArc{0, 1, sa, ArcKind::forward}));

  net.set_flow(sa, true);
  ASSERT_EQ(net.residual_out(1).size(), 1u);
  EXPECT_EQ(net.residual_out(1)[0], (ResidualArc{1, 0, sa, ArcKind::backward}));

  EdgeId at = net.insert_edge(1, 2);
  net.set_flow(at, true);
  // both edges saturated: the only arc out of a is the backward one to s
  EXPECT_EQ(test::arc_multiset({net.residual_out(1).begin(), net.residual_out(1).end()}),
            test::arc_multiset(test::recompute_residual_out(net, 1)));
  ASSERT_EQ(net.residual_out(1).size(), 1u);
  EXPECT_EQ(net.residual_out(1)[0].kind, ArcKind::backward);
  EXPECT_EQ(net.residual_out(1)[0].to, 0);
}

TEST(FlowNetwork, AugmentSingleEdge) {
  FlowNetwork net(2, 0, 1);
  EdgeId st = net.insert_edge(0, 1);
  net.augment(std::vector<ResidualArc>{{0, 1, st, ArcKind::forward}});
  EXPECT_EQ(net.flow_value(), 1);
  EXPECT_TRUE(net.edge(st).flow);
  EXPECT_EQ(net.check_valid(), std::nullopt);
}

TEST(FlowNetwork, AugmentThroughBackwardArc) {
  // s=0, a=1, b=2, t=3; saturate s->a->b->t, then reroute via the backward
  // arc of (a,b) after inserting (s,b) and (a,t).
  FlowNetwork net(4, 0, 3);
  EdgeId sa = net.insert_edge(0, 1);
  EdgeId ab = net.insert_edge(1, 2);
  EdgeId bt = net.insert_edge(2, 3);
  net.augment(std::vector<ResidualArc>{{0, 1, sa, ArcKind::forward},
                                       {1, 2, ab, ArcKind::forward},
                                       {2, 3, bt, ArcKind::forward}});
  EXPECT_EQ(net.flow_value(), 1);

  EdgeId sb = net.insert_edge(0, 2);
  EdgeId at = net.insert_edge(1, 3);
  net.augment(std::vector<ResidualArc>{{0, 2, sb, ArcKind::forward},
                                       {2, 1, ab, ArcKind::backward},
                                       {1, 3, at, ArcKind::forward}});
  EXPECT_EQ(net.flow_value(), 2);
  EXPECT_FALSE(net.edge(ab).flow);  // rerouted back to empty
  EXPECT_EQ(net.check_valid(), std::nullopt);

  // oracle agreement on the final instance
  EXPECT_EQ(edmonds_karp(net, 0, 3).value, 2);
}

TEST(FlowNetwork, AugmentTwoDisjointPaths) {
  FlowNetwork net(4, 0, 3);
  EdgeId sa = net.insert_edge(0, 1);
  EdgeId at = net.insert_edge(1, 3);
  EdgeId sb = net.insert_edge(0, 2);
  EdgeId bt = net.insert_edge(2, 3);
  net.augment(std::vector<ResidualArc>{{0, 1, sa, ArcKind::forward},
                                       {1, 3, at, ArcKind::forward}});
  net.augment(std::vector<ResidualArc>{{0, 2, sb, ArcKind::forward},
                                       {2, 3, bt, ArcKind::forward}});
  EXPECT_EQ(net.flow_value(), 2);
}

TEST(FlowNetwork, AugmentRejectsBadPaths) {
  FlowNetwork net(4, 0, 3);
  EdgeId sa = net.insert_edge(0, 1);
  EdgeId at = net.insert_edge(1, 3);
  EdgeId sb = net.insert_edge(0, 2);

  // empty path
  EXPECT_THROW(net.augment(std::vector<ResidualArc>{}), std::invalid_argument);
  // does not end at target
  EXPECT_THROW(net.augment(std::vector<ResidualArc>{{0, 1, sa, ArcKind::forward}}),
               std::invalid_argument);
  // non-chaining
  EXPECT_THROW(net.augment(std::vector<ResidualArc>{{0, 2, sb, ArcKind::forward},
                                                    {1, 3, at, ArcKind::forward}}),
               std::invalid_argument);
  // arc inconsistent with flow bits (claims backward on an empty edge)
  EXPECT_THROW(net.augment(std::vector<ResidualArc>{{0, 1, sa, ArcKind::forward},
                                                    {1, 3, at, ArcKind::backward}}),
               std::invalid_argument);
  // nothing was applied
  EXPECT_EQ(net.flow_value(), 0);
  EXPECT_EQ(net.check_valid(), std::nullopt);
}

TEST(FlowNetwork, AugmentRejectsVertexRepeat) {
  FlowNetwork net(4, 0, 3);
  EdgeId sa = net.insert_edge(0, 1);
  EdgeId ab = net.insert_edge(1, 2);
  EdgeId ba = net.insert_edge(2, 1);
  EdgeId at = net.insert_edge(1, 3);
  EXPECT_THROW(net.augment(std::vector<ResidualArc>{{0, 1, sa, ArcKind::forward},
                                                    {1, 2, ab, ArcKind::forward},
                                                    {2, 1, ba, ArcKind::forward},
                                                    {1, 3, at, ArcKind::forward}}),
               std::invalid_argument);
}

TEST(FlowNetwork, FlowValueMatchesOracleAfterSaturation) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 20; ++round) {
    FlowNetwork net(8, 0, 7);
    for (int i = 0; i < 20; ++i) {
      auto [u, v] = test::random_arc(rng, 8);
      net.insert_edge(u, v);
    }
    int before = net.flow_value();
    while (auto path = test::find_augmenting_path(net)) {
      net.augment(*path);
      EXPECT_EQ(net.flow_value(), before + 1);  // exactly one unit per augmentation
      before = net.flow_value();
    }
    EXPECT_EQ(net.flow_value(), edmonds_karp(net, 0, 7).value);
    EXPECT_EQ(net.check_valid(), std::nullopt);
  }
}

TEST(FlowNetwork, CheckValidReportsViolations) {
  FlowNetwork net(4, 0, 3);
  EXPECT_EQ(net.check_valid(), std::nullopt);

  // force inflow without outflow at vertex 1
  EdgeId sa = net.insert_edge(0, 1);
  net.insert_edge(1, 3);
  net.set_flow(sa, true);
  auto violation = net.check_valid();
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->kind, FlowViolation::Kind::conservation);
  EXPECT_EQ(violation->vertex, 1);
  EXPECT_FALSE(violation->describe().empty());

  // flow on a self-loop
  FlowNetwork loops(3, 0, 2);
  EdgeId loop = loops.insert_edge(1, 1);
  loops.set_flow(loop, true);
  auto loop_violation = loops.check_valid();
  ASSERT_TRUE(loop_violation.has_value());
  EXPECT_EQ(loop_violation->kind, FlowViolation::Kind::self_loop_flow);
  EXPECT_EQ(loop_violation->edge, loop);

  // value counter out of sync with the source's net outflow
  FlowNetwork direct(2, 0, 1);
  EdgeId st = direct.insert_edge(0, 1);
  direct.set_flow(st, true);
  auto value_violation = direct.check_valid();
  ASSERT_TRUE(value_violation.has_value());
  EXPECT_EQ(value_violation->kind, FlowViolation::Kind::value_mismatch);
}

// Property: the incrementally maintained residual adjacency equals a
// from-scratch recomputation after any operation sequence, and every state
// reached through insert/augment stays a valid flow.
TEST(FlowNetwork, ResidualIndexMatchesScratchRecompute) {
  std::mt19937_64 rng(7);
  for (int history = 0; history < 500; ++history) {
    const int n = 2 + static_cast<int>(rng() % 10);
    FlowNetwork net(n, 0, n - 1);
    const int ops = 1 + static_cast<int>(rng() % 30);
    for (int op = 0; op < ops; ++op) {
      if (rng() % 4 == 0) {
        if (auto path = test::find_augmenting_path(net)) net.augment(*path);
      } else {
        auto u = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
        auto v = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
        net.insert_edge(u, v);  // occasionally a self-loop
      }
      ASSERT_EQ(net.check_valid(), std::nullopt);
    }
    for (VertexId v = 0; v < n; ++v) {
      auto maintained = net.residual_out(v);
      ASSERT_EQ(test::arc_multiset({maintained.begin(), maintained.end()}),
                test::arc_multiset(test::recompute_residual_out(net, v)));
    }
  }
}

}  // namespace
}  // namespace incflow
