#include <gtest/gtest.h>

#include <random>

#include "hopfgraph/hopf_ops.hpp"
#include "test_support.hpp"

namespace hopfgraph {
namespace {

Leg leg(int vertex, int label) { return {static_cast<Vertex>(vertex), ExternalLabel{label}, {}}; }
Edge edge(int a, int b, int species = 1) {
  return {static_cast<Vertex>(a), static_cast<Vertex>(b), Species{static_cast<std::uint8_t>(species)}};
}
const Rational kHalf(1, 2);

TEST(ApplyT, AddsSelfLoopWithHalf) {
  GraphSum out = apply_T(0, GraphSum(Graph(), 1));
  EXPECT_EQ(out, GraphSum(Graph::make(1, {}, {edge(0, 0)}), kHalf));
}

TEST(ApplyT, SecondLoopHalvesAgain) {
  GraphSum out = apply_T(0, GraphSum(Graph::make(1, {}, {edge(0, 0)}), kHalf));
  EXPECT_EQ(out, GraphSum(Graph::make(1, {}, {edge(0, 0), edge(0, 0)}), Rational(1, 4)));
}

TEST(ApplyT, EmptySumAndRangeCheck) {
  EXPECT_TRUE(apply_T(0, GraphSum{}).empty());
  EXPECT_THROW(apply_T(1, GraphSum(Graph(), 1)), std::out_of_range);
  EXPECT_THROW(apply_T(1, GraphSum(Graph(), 1), {1, 4}), std::out_of_range);
}

TEST(ApplyT, OneTermPerSpecies) {
  GraphSum out = apply_T(0, GraphSum(Graph(), 1), {3, 1});
  ASSERT_EQ(out.size(), 3u);
  for (const auto& [g, w] : out) EXPECT_EQ(w, kHalf);
}

TEST(ApplyQ, SplitsTwoLegsFourWays) {
  Graph vertex = Graph::make(1, {leg(0, 1), leg(0, 2)}, {});
  auto raw = split_terms(0, vertex, 1);
  ASSERT_EQ(raw.size(), 4u);
  for (const auto& [g, w] : raw) {
    EXPECT_EQ(w, kHalf);
    EXPECT_EQ(g.edges(), std::vector<Edge>{edge(0, 1)});
  }
  GraphSum expected;
  expected.add(Graph::make(2, {leg(0, 1), leg(0, 2)}, {edge(0, 1)}), kHalf);
  expected.add(Graph::make(2, {leg(0, 1), leg(1, 2)}, {edge(0, 1)}), kHalf);
  expected.add(Graph::make(2, {leg(1, 1), leg(0, 2)}, {edge(0, 1)}), kHalf);
  expected.add(Graph::make(2, {leg(1, 1), leg(1, 2)}, {edge(0, 1)}), kHalf);
  EXPECT_EQ(apply_Q(0, GraphSum(vertex, 1)), expected);
}

TEST(ApplyQ, BareVertexBecomesEdge) {
  EXPECT_EQ(apply_Q(0, GraphSum(Graph(), 1)), GraphSum(Graph::make(2, {}, {edge(0, 1)}), kHalf));
}

TEST(ApplyQ, SelfLoopSplitsIntoDoubleEdgeAndLoops) {
  // Four assignments of the loop's two half-edges; the two mixed ones merge.
  GraphSum out = apply_Q(0, GraphSum(Graph::make(1, {}, {edge(0, 0)}), 1));
  GraphSum expected;
  expected.add(Graph::make(2, {}, {edge(0, 1), edge(0, 1)}), 1);
  expected.add(Graph::make(2, {}, {edge(0, 0), edge(0, 1)}), kHalf);
  expected.add(Graph::make(2, {}, {edge(1, 1), edge(0, 1)}), kHalf);
  EXPECT_EQ(out, expected);
}

TEST(ApplyQ, ShiftsLaterVertices) {
  // Path 1-2-3, split vertex 2 with nothing moved: 1-2, 2-3 bridge, 2-4.
  Graph path = Graph::make(3, {leg(2, 1)}, {edge(0, 1), edge(1, 2)});
  auto raw = split_terms(1, path, 1);
  ASSERT_EQ(raw.size(), 4u);
  EXPECT_EQ(raw[0].first, Graph::make(4, {leg(3, 1)}, {edge(0, 1), edge(1, 2), edge(1, 3)}));
}

TEST(HopfOps, BookkeepingOnRandomGraphs) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int v = 1 + trial % 4;
    int species = 1 + trial % 2;
    Graph g = testing::random_connected_graph(rng, v, trial % 3, trial % 3, species);
    GraphStats before = graph_stats(g);
    auto i = static_cast<Vertex>(trial % v);

    auto raw = split_terms(i, g, 1, species);
    EXPECT_EQ(raw.size(), (std::size_t{1} << g.degree(i)) * static_cast<std::size_t>(species));

    for (const auto& [h, w] : apply_Q(i, GraphSum(g, 1), {species, 1})) {
      GraphStats after = graph_stats(h);
      ASSERT_TRUE(after.connected);
      EXPECT_EQ(after.vertices, before.vertices + 1);
      EXPECT_EQ(after.edges, before.edges + 1);
      EXPECT_EQ(after.loops, before.loops);
      EXPECT_EQ(after.legs, before.legs);
    }
    for (const auto& [h, w] : apply_T(i, GraphSum(g, 1), {species, 1})) {
      GraphStats after = graph_stats(h);
      ASSERT_TRUE(after.connected);
      EXPECT_EQ(after.vertices, before.vertices);
      EXPECT_EQ(after.edges, before.edges + 1);
      EXPECT_EQ(*after.loops, *before.loops + 1);
    }
  }
}

TEST(HopfOps, Linearity) {
  std::mt19937 rng(103);
  GraphSum a;
  GraphSum b;
  for (int k = 0; k < 20; ++k) {
    a.add(testing::random_connected_graph(rng, 3, k % 2, 2), ratio(k + 1, 3));
    b.add(testing::random_connected_graph(rng, 3, k % 3, 2), ratio(-k, 5));
  }
  const Rational c(7, 2);
  for (Vertex i = 0; i < 3; ++i) {
    EXPECT_EQ(apply_Q(i, a + b * c), apply_Q(i, a) + apply_Q(i, b) * c);
    EXPECT_EQ(apply_T(i, a + b * c), apply_T(i, a) + apply_T(i, b) * c);
  }
}

TEST(HopfOps, ThreadCountDoesNotChangeResult) {
  std::mt19937 rng(107);
  GraphSum a;
  for (int k = 0; k < 50; ++k) a.add(testing::random_connected_graph(rng, 3, k % 3, 3), ratio(k + 1, 7));
  EXPECT_EQ(apply_Q(1, a, {1, 1}), apply_Q(1, a, {1, 5}));
  EXPECT_EQ(apply_T(2, a, {2, 1}), apply_T(2, a, {2, 3}));
}

}  // namespace
}  // namespace hopfgraph
