#include "incflow/bounded_maxflow.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "incflow/static_maxflow.hpp"
#include "test_support.hpp"

namespace incflow {
namespace {

TEST(BoundedMaxFlow, InitialState) {
  BoundedMaxFlow bmf(4, 0, 3, 2);
  EXPECT_EQ(bmf.value(), 0);
  EXPECT_FALSE(bmf.saturated());
  EXPECT_EQ(bmf.cutoff(), 2);

  BoundedMaxFlow zero_cutoff(2, 0, 1, 0);
  EXPECT_EQ(zero_cutoff.value(), 0);

  EXPECT_THROW(BoundedMaxFlow(2, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(BoundedMaxFlow(2, 0, 1, -1), std::invalid_argument);
}

TEST(BoundedMaxFlow, SingleAugmentationCountsOneRebuild) {
  BoundedMaxFlow bmf(2, 0, 1, 5);
  bmf.insert(0, 1);
  EXPECT_EQ(bmf.value(), 1);
  EXPECT_EQ(bmf.work().tree_rebuilds, 1);
}

TEST(BoundedMaxFlow, BackwardArcPrefixTrace) {
  // s=0, a=1, b=2, t=3; per-prefix exact values 0, 0, 1, 1, 2
  BoundedMaxFlow bmf(4, 0, 3, 5);
  const std::vector<std::pair<VertexId, VertexId>> inserts{
      {0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}};
  const std::vector<int> expected{0, 0, 1, 1, 2};
  for (std::size_t i = 0; i < inserts.size(); ++i) {
    bmf.insert(inserts[i].first, inserts[i].second);
    EXPECT_EQ(bmf.value(), expected[i]) << "prefix " << i + 1;
  }
  EXPECT_EQ(bmf.network().check_valid(), std::nullopt);
}

TEST(BoundedMaxFlow, SaturatesAtCutoffPlusOneAndDropsInserts) {
  BoundedMaxFlow bmf(2, 0, 1, 1);
  bmf.insert(0, 1);
  EXPECT_EQ(bmf.value(), 1);
  EXPECT_FALSE(bmf.saturated());
  bmf.insert(0, 1);
  EXPECT_EQ(bmf.value(), 2);  // cutoff + 1 signals "at least this much"
  EXPECT_TRUE(bmf.saturated());
  bmf.insert(0, 1);  // dropped entirely
  EXPECT_EQ(bmf.value(), 2);
  EXPECT_EQ(bmf.network().edge_count(), 2);
}

TEST(BoundedMaxFlow, ZeroCutoffSaturatesOnFirstAugmentation) {
  BoundedMaxFlow bmf(2, 0, 1, 0);
  bmf.insert(0, 1);
  EXPECT_EQ(bmf.value(), 1);
  EXPECT_TRUE(bmf.saturated());
}

TEST(BoundedMaxFlow, SelfLoopsAreInert) {
  BoundedMaxFlow bmf(3, 0, 2, 3);
  bmf.insert(1, 1);
  bmf.insert(0, 1);
  bmf.insert(1, 1);
  bmf.insert(1, 2);
  EXPECT_EQ(bmf.value(), 1);
  EXPECT_EQ(bmf.network().check_valid(), std::nullopt);
}

TEST(BoundedMaxFlow, FlowAssignmentCarriesTheValue) {
  BoundedMaxFlow bmf(2, 0, 1, 3);
  bmf.insert(0, 1);
  std::vector<bool> bits = bmf.flow();
  ASSERT_EQ(bits.size(), 1u);
  EXPECT_TRUE(bits[0]);

  // net outflow of the source equals the reported value
  BoundedMaxFlow wide(4, 0, 3, 4);
  for (auto [u, v] : std::vector<std::pair<VertexId, VertexId>>{
           {0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 1}}) {
    wide.insert(u, v);
  }
  int outflow = 0;
  for (EdgeId e = 0; e < wide.network().edge_count(); ++e) {
    const EdgeRecord& rec = wide.network().edge(e);
    if (!rec.flow) continue;
    outflow += rec.tail == 0 ? 1 : 0;
    outflow -= rec.head == 0 ? 1 : 0;
  }
  EXPECT_EQ(outflow, wide.value());
}

// Exactness against the per-prefix oracle, plus the optimality certificate
// and validity of every intermediate flow.
TEST(BoundedMaxFlow, MatchesOracleOnEveryPrefix) {
  std::mt19937_64 rng(5);
  for (int stream = 0; stream < 50; ++stream) {
    const int n = 10;
    BoundedMaxFlow bmf(n, 0, n - 1, n);
    FlowNetwork prefix(n, 0, n - 1);
    int previous = 0;
    for (int i = 0; i < 40; ++i) {
      auto [u, v] = test::random_arc(rng, n);
      bmf.insert(u, v);
      prefix.insert_edge(u, v);
      int oracle = edmonds_karp(prefix, 0, n - 1).value;
      ASSERT_EQ(bmf.value(), oracle);
      ASSERT_GE(bmf.value(), previous);  // monotone
      previous = bmf.value();
      ASSERT_EQ(bmf.network().check_valid(), std::nullopt);
      // Lemma-style certificate: no residual s-t path once the value is exact
      ASSERT_FALSE(test::residual_path_exists(bmf.network()));
    }
  }
}

TEST(BoundedMaxFlow, WorkCountersStayWithinRoundBudget) {
  std::mt19937_64 rng(29);
  const int n = 20;
  const int cutoff = 6;
  BoundedMaxFlow bmf(n, 0, n - 1, cutoff);
  std::int64_t inserted = 0;
  for (int i = 0; i < 400; ++i) {
    auto [u, v] = test::random_arc(rng, n);
    if (!bmf.saturated()) ++inserted;
    bmf.insert(u, v);
  }
  std::int64_t m = bmf.network().edge_count();
  EXPECT_EQ(m, inserted);
  EXPECT_LE(bmf.work().residual_arc_scans, 4 * m * (cutoff + 2));
  EXPECT_EQ(bmf.work().tree_rebuilds, bmf.value());
  EXPECT_LE(bmf.value(), cutoff + 1);

  for (const auto& epoch : bmf.completed_epochs())
    EXPECT_LE(epoch.update_tree_calls, 2 * epoch.inserted_arcs + epoch.initial_arcs);
  auto open = bmf.current_epoch();
  EXPECT_LE(open.update_tree_calls, 2 * open.inserted_arcs + open.initial_arcs);
}

}  // namespace
}  // namespace incflow
