#include <gtest/gtest.h>

#include "hopfgraph/brute_force.hpp"
#include "hopfgraph/canonical.hpp"
#include "hopfgraph/generator.hpp"
#include "hopfgraph/symmetry.hpp"

namespace hopfgraph {
namespace {

Edge edge(int a, int b, int species = 1) {
  return {static_cast<Vertex>(a), static_cast<Vertex>(b), Species{static_cast<std::uint8_t>(species)}};
}
const std::vector<ExternalLeg> kNoLegs;

std::set<Graph> support(const GraphSum& s) {
  std::set<Graph> out;
  for (const auto& [g, w] : s) out.insert(g);
  return out;
}

TEST(Omega, BaseCaseIsIdentity) {
  Generator gen;
  auto legs = make_legs(3);
  EXPECT_EQ(gen.omega(0, 1, legs), GraphSum(single_vertex(legs), 1));
}

TEST(Omega, OneLoopOneVertex) {
  Generator gen;
  EXPECT_EQ(gen.omega(1, 1, kNoLegs), GraphSum(Graph::make(1, {}, {edge(0, 0)}), Rational(1, 2)));
}

TEST(Omega, TreeOnTwoVertices) {
  Generator gen;
  EXPECT_EQ(gen.omega(0, 2, kNoLegs), GraphSum(Graph::make(2, {}, {edge(0, 1)}), Rational(1, 2)));
}

TEST(Omega, OneLoopTwoVerticesByHand) {
  // 1/2 (Q_1 Omega^{1,1} + T_1 Omega^{0,2} + T_2 Omega^{0,2})
  Generator gen;
  GraphSum expected;
  expected.add(Graph::make(2, {}, {edge(0, 0), edge(0, 1)}), Rational(1, 4));
  expected.add(Graph::make(2, {}, {edge(1, 1), edge(0, 1)}), Rational(1, 4));
  expected.add(Graph::make(2, {}, {edge(0, 1), edge(0, 1)}), Rational(1, 4));
  EXPECT_EQ(gen.omega(1, 2, kNoLegs), expected);

  GraphSum unordered = forget_order(expected);
  ASSERT_EQ(unordered.size(), 2u);
  EXPECT_EQ(unordered.weight(canonical_unordered(Graph::make(2, {}, {edge(0, 1), edge(0, 1)}))),
            Rational(1, 4));
  EXPECT_EQ(unordered.weight(canonical_unordered(Graph::make(2, {}, {edge(0, 0), edge(0, 1)}))),
            Rational(1, 2));
}

TEST(Omega, PathOnThreeVerticesIsNotOrderSymmetric) {
  // Q_1 and Q_2 reach the middle-centred path twice, the others once.
  Generator gen;
  GraphSum s = gen.omega(0, 3, kNoLegs);
  EXPECT_EQ(s.weight(Graph::make(3, {}, {edge(0, 1), edge(0, 2)})), Rational(1, 8));
  EXPECT_EQ(s.weight(Graph::make(3, {}, {edge(0, 1), edge(1, 2)})), Rational(1, 4));
  EXPECT_EQ(s.weight(Graph::make(3, {}, {edge(0, 2), edge(1, 2)})), Rational(1, 8));
}

TEST(Omega, RejectsInvalidArguments) {
  Generator gen;
  EXPECT_THROW(gen.omega(-1, 1, kNoLegs), std::invalid_argument);
  EXPECT_THROW(gen.omega(0, 0, kNoLegs), std::invalid_argument);
  std::vector<ExternalLeg> dup{{ExternalLabel{1}, {}}, {ExternalLabel{1}, {}}};
  EXPECT_THROW(gen.omega(0, 1, dup), std::invalid_argument);
  std::vector<ExternalLeg> reserved{{ExternalLabel{kVirtualLabelBase}, {}}};
  EXPECT_THROW(gen.omega(0, 1, reserved), std::invalid_argument);
  std::vector<ExternalLeg> species{{ExternalLabel{1}, Species{2}}};
  EXPECT_THROW(gen.omega(0, 1, species), std::invalid_argument);
}

TEST(OmegaAlt, SmallCasesByHand) {
  Generator gen;
  EXPECT_EQ(gen.omega_alt(0, 2, kNoLegs), GraphSum(Graph::make(2, {}, {edge(0, 1)}), Rational(1, 2)));
  EXPECT_EQ(gen.omega_alt(1, 1, kNoLegs), GraphSum(Graph::make(1, {}, {edge(0, 0)}), Rational(1, 2)));
  EXPECT_THROW(gen.omega_alt(0, 1, kNoLegs), std::invalid_argument);
}

TEST(OmegaAlt, EqualsOmegaOnSmallInstances) {
  Generator gen;
  for (int e = 1; e <= 4; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      const int l = e - v + 1;
      for (int n = 0; n <= 2; ++n) {
        auto legs = make_legs(n);
        EXPECT_EQ(gen.omega_alt(l, v, legs), gen.omega(l, v, legs)) << l << ' ' << v << ' ' << n;
      }
    }
  }
}

TEST(OmegaAlt, EqualsOmegaWithTwoSpecies) {
  Generator gen({2, true, 1});
  std::vector<ExternalLeg> legs{{ExternalLabel{3}, Species{2}}, {ExternalLabel{8}, Species{1}}};
  for (auto [l, v] : {std::pair{0, 2}, {1, 1}, {1, 2}, {0, 3}, {2, 1}}) {
    EXPECT_EQ(gen.omega_alt(l, v, legs), gen.omega(l, v, legs)) << l << ' ' << v;
  }
}

TEST(EnumerateConnected, Examples) {
  Generator gen;
  auto one = make_legs(1);
  GraphSum tree = gen.enumerate_connected(0, 2, one);
  ASSERT_EQ(tree.size(), 1u);
  EXPECT_EQ(tree.begin()->second, 1);
  EXPECT_EQ(tree.begin()->first, canonical_unordered(tree.begin()->first));

  EXPECT_EQ(gen.enumerate_connected(1, 1, kNoLegs),
            GraphSum(Graph::make(1, {}, {edge(0, 0)}), Rational(1, 2)));
  auto two = make_legs(2);
  EXPECT_EQ(gen.enumerate_connected(0, 1, two), GraphSum(single_vertex(two), 1));
}

TEST(EnumerateConnected, EqualsForgetOrderOfOmega) {
  Generator gen;
  for (int e = 0; e <= 4; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      for (int n = 0; n <= 3; ++n) {
        auto legs = make_legs(n);
        EXPECT_EQ(gen.enumerate_connected(e - v + 1, v, legs), forget_order(gen.omega(e - v + 1, v, legs)));
      }
    }
  }
}

TEST(EnumerateConnected, CallerLabelsAreSubstituted) {
  Generator gen({2, true, 1});
  std::vector<ExternalLeg> legs{{ExternalLabel{7}, Species{2}}, {ExternalLabel{4}, Species{1}}};
  GraphSum s = gen.enumerate_connected(1, 2, legs);
  EXPECT_EQ(s, forget_order(gen.omega(1, 2, legs)));
  for (const auto& [g, w] : s) {
    std::set<std::pair<int, int>> seen;
    for (const Leg& leg : g.legs()) seen.insert({leg.label.id, leg.species.id});
    EXPECT_EQ(seen, (std::set<std::pair<int, int>>{{4, 1}, {7, 2}}));
  }
}

TEST(Generator, WeightLawOnSmallInstances) {
  Generator gen;
  for (int e = 0; e <= 4; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      for (int n = 0; n <= 3; ++n) {
        for (const auto& [g, w] : gen.enumerate_connected(e - v + 1, v, make_legs(n))) {
          EXPECT_EQ(w * Rational(symmetry_factor(g)), 1);
        }
      }
    }
  }
}

TEST(Generator, WeightLawWithTwoSpecies) {
  Generator gen({2, true, 1});
  std::vector<ExternalLeg> legs{{ExternalLabel{1}, Species{1}}, {ExternalLabel{2}, Species{2}}};
  for (int e = 0; e <= 3; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      for (const auto& [g, w] : gen.enumerate_connected(e - v + 1, v, legs)) {
        EXPECT_EQ(w * Rational(symmetry_factor(g)), 1);
      }
    }
  }
}

TEST(Generator, Bookkeeping) {
  Generator gen;
  for (int e = 0; e <= 4; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      for (int n = 0; n <= 2; ++n) {
        for (const auto& [g, w] : gen.omega(e - v + 1, v, make_legs(n))) {
          GraphStats s = graph_stats(g);
          ASSERT_TRUE(s.connected);
          EXPECT_EQ(s.vertices, v);
          EXPECT_EQ(s.edges, e);
          EXPECT_EQ(s.loops, e - v + 1);
          ASSERT_EQ(s.legs, n);
          for (int k = 0; k < n; ++k) EXPECT_EQ(g.legs()[static_cast<std::size_t>(k)].label.id >= 1, true);
        }
      }
    }
  }
}

TEST(Generator, TreeLemma) {
  Generator gen;
  for (int v = 1; v <= 4; ++v) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& [g, w] : gen.enumerate_connected(0, v, make_legs(n))) {
        auto d = g.degrees();
        if (*std::min_element(d.begin(), d.end()) >= 2) EXPECT_EQ(w, 1);
      }
    }
  }
}

TEST(Generator, MemoizationAndThreadsAreTransparent) {
  Generator memo;
  Generator plain({1, false, 1});
  Generator threaded({1, true, 4});
  for (auto [l, v, n] : {std::tuple{1, 3, 2}, {2, 2, 1}, {0, 4, 2}}) {
    auto legs = make_legs(n);
    GraphSum reference = memo.omega(l, v, legs);
    EXPECT_EQ(plain.omega(l, v, legs), reference);
    EXPECT_EQ(threaded.omega(l, v, legs), reference);
    EXPECT_EQ(threaded.enumerate_connected(l, v, legs), memo.enumerate_connected(l, v, legs));
    EXPECT_EQ(threaded.omega_alt(l, v, legs), reference);
  }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_enumerate(0, 2, 0).size(), 1u);
  EXPECT_EQ(brute_force_enumerate(1, 1, 0).size(), 1u);
  EXPECT_EQ(brute_force_enumerate(1, 2, 0).size(), 2u);
  EXPECT_THROW(brute_force_enumerate(5, 5, 0, 1, 7), ResourceGuardError);
}

TEST(BruteForce, MatchesGeneratorSupport) {
  Generator gen;
  for (int e = 0; e <= 4; ++e) {
    for (int v = 1; v <= e + 1; ++v) {
      for (int n = 0; n <= 2; ++n) {
        EXPECT_EQ(support(gen.enumerate_connected(e - v + 1, v, make_legs(n))),
                  brute_force_enumerate(e - v + 1, v, n));
      }
    }
  }
  Generator two({2, true, 1});
  EXPECT_EQ(support(two.enumerate_connected(1, 2, make_legs(1))), brute_force_enumerate(1, 2, 1, 2));
}

}  // namespace
}  // namespace hopfgraph
