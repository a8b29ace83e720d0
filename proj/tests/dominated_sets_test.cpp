#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "trace_turan/dominated_sets.hpp"

using namespace trace_turan;

namespace {

LoopGraph path(int n) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  LoopGraph g(vs);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Loop graph from bit masks: bit k of `edges` is the k-th pair (i<j order),
/// bit v of `loops` a loop at v.
LoopGraph from_masks(int n, unsigned edges, unsigned loops) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  LoopGraph g(vs);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (edges >> k & 1U) g.add_edge(i, j);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (loops >> v & 1U) g.add_loop(v);
  }
  return g;
}

void expect_star_decomposition(const LoopGraph& g) {
  StarDecomposition dec = star_loop_decomposition(g);
  std::vector<int> seen(g.order(), 0);
  auto idx = [&](Vertex v) { return static_cast<std::size_t>(v); };
  for (const StarComponent& c : dec.components) {
    ++seen[idx(c.center)];
    if (c.is_loop_vertex()) {
      EXPECT_GT(g.loops(c.center), 0);
    }
    for (Vertex leaf : c.leaves) {
      ++seen[idx(leaf)];
      EXPECT_TRUE(g.has_edge(c.center, leaf));
    }
  }
  for (int count : seen) EXPECT_EQ(count, 1);
}

}  // namespace

TEST(Dominated, DefinitionExamples) {
  LoopGraph g = path(3);
  EXPECT_TRUE(is_dominated(g, std::vector<Vertex>{0, 2}));
  EXPECT_FALSE(is_dominated(g, std::vector<Vertex>{0, 1}));
  g.add_loop(1);
  EXPECT_FALSE(is_dominated(g, std::vector<Vertex>{0, 1}));
  g.add_loop(0);
  EXPECT_TRUE(is_dominated(g, std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(is_dominated(g, std::vector<Vertex>{}));
}

TEST(Dominated, WitnessesAreChecked) {
  LoopGraph g = path(3);
  std::vector<Vertex> d{0, 2};
  WitnessMap w = make_witnesses(g, d);
  EXPECT_TRUE(witnesses_valid(g, d, w));
  EXPECT_EQ(w.at(0), Witness::outside(1));
  w[0] = Witness::loop();
  EXPECT_FALSE(witnesses_valid(g, d, w));
  EXPECT_THROW(make_witnesses(g, std::vector<Vertex>{0, 1}), std::invalid_argument);
}

TEST(StarDecomposition, ExhaustiveSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned e = 0; e < (1U << pairs); ++e) {
      for (unsigned l = 0; l < (1U << n); ++l) {
        LoopGraph g = from_masks(n, e, l);
        if (g.min_degree() == 0) {
          EXPECT_THROW(star_loop_decomposition(g), PreconditionViolation);
          continue;
        }
        expect_star_decomposition(g);
      }
    }
  }
}

TEST(PairMin1, ExhaustiveUpToFourVertices) {
  for (int n = 1; n <= 4; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    std::vector<LoopGraph> graphs;
    for (unsigned e = 0; e < (1U << pairs); ++e) {
      for (unsigned l = 0; l < (1U << n); ++l) {
        LoopGraph g = from_masks(n, e, l);
        if (g.min_degree() > 0) graphs.push_back(g);
      }
    }
    const std::size_t need = static_cast<std::size_t>((n + 2) / 3);
    for (const LoopGraph& gx : graphs) {
      for (const LoopGraph& gy : graphs) {
        PairDominatedSetResult r = dominated_pair_min1(gx, gy);
        ASSERT_GE(r.members.size(), need);
        ASSERT_TRUE(witnesses_valid(gx, r.members, r.in_x));
        ASSERT_TRUE(witnesses_valid(gy, r.members, r.in_y));
        ASSERT_TRUE(oracles::dominated_by_definition(gx, r.members));
        ASSERT_TRUE(oracles::dominated_by_definition(gy, r.members));
      }
    }
  }
}

TEST(PairMin1, ThreeVerticesNotTriangleGivesTwo) {
  // gx: path 0-1-2, gy: 0-1 and loop at 2. The union lacks {0,2}.
  LoopGraph gx = path(3);
  LoopGraph gy = from_masks(3, 0b001, 0b100);
  PairDominatedSetResult r = dominated_pair_min1(gx, gy);
  EXPECT_EQ(r.members.size(), 2u);
}

TEST(PairMin1, CentersOfOneForestAreLeavesOfTheOther) {
  // Removing every star center of both decompositions leaves only 2 of 7
  // vertices here; {2, 3, 4} is dominated in both.
  LoopGraph gx({0, 1, 2, 3, 4, 5, 6});
  for (auto [u, v] : {std::pair{0, 5}, {0, 6}, {1, 2}, {1, 3}, {2, 5}, {5, 6}}) gx.add_edge(u, v);
  gx.add_loop(4);
  LoopGraph gy({0, 1, 2, 3, 4, 5, 6});
  for (auto [u, v] : {std::pair{0, 5}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {4, 5}}) gy.add_edge(u, v);
  gy.add_loop(2);
  gy.add_loop(3);
  const std::vector<Vertex> known{2, 3, 4};
  EXPECT_TRUE(oracles::dominated_by_definition(gx, known));
  EXPECT_TRUE(oracles::dominated_by_definition(gy, known));
  PairDominatedSetResult r = dominated_pair_min1(gx, gy);
  EXPECT_GE(r.members.size(), 3u);
  EXPECT_TRUE(witnesses_valid(gx, r.members, r.in_x));
  EXPECT_TRUE(witnesses_valid(gy, r.members, r.in_y));
}

TEST(PairMin1, RandomGraphs) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 14);
    LoopGraph gx = oracles::random_loop_graph(n, 0.25, 0.15, rng);
    LoopGraph gy = oracles::random_loop_graph(n, 0.25, 0.15, rng);
    PairDominatedSetResult r = dominated_pair_min1(gx, gy);
    EXPECT_GE(3 * r.members.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(oracles::dominated_by_definition(gx, r.members));
    EXPECT_TRUE(oracles::dominated_by_definition(gy, r.members));
  }
}

TEST(PairMin1, Rejects) {
  LoopGraph a = path(3);
  LoopGraph b({0, 1, 3});
  EXPECT_THROW(dominated_pair_min1(a, b), std::invalid_argument);
  LoopGraph c({0, 1, 2});
  EXPECT_THROW(dominated_pair_min1(a, c), std::invalid_argument);
}

TEST(Epsilon, Values) {
  EXPECT_NEAR(epsilon_delta(2), (1 + std::log(3.0)) / 3, 1e-15);
  EXPECT_LE(epsilon_delta(14), 0.25);
  EXPECT_THROW(epsilon_delta(1), std::invalid_argument);
  EXPECT_EQ(min_degree_guarantee(10, 14), 8u);
}

TEST(MinDegree, GuaranteeOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const int delta = 2 + static_cast<int>(rng() % 5);
    const int n = delta + 1 + static_cast<int>(rng() % 20);
    LoopGraph g = oracles::random_loop_graph(n, 0.2, 0.1, rng);
    oracles::raise_min_degree(g, delta, rng);
    MinDegreeStats stats;
    DominatedSetResult r = dominated_min_degree(g, delta, rng(), {}, &stats);
    EXPECT_GE(r.members.size(), min_degree_guarantee(g.order(), delta));
    EXPECT_TRUE(witnesses_valid(g, r.members, r.witnesses));
    EXPECT_TRUE(oracles::dominated_by_definition(g, r.members));
    EXPECT_GE(stats.attempts, 1);
  }
}

TEST(MinDegree, GreedyIsDeterministicAndMeetsGuarantee) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 100; ++round) {
    const int delta = 2 + static_cast<int>(rng() % 3);
    LoopGraph g = oracles::random_loop_graph(12, 0.3, 0.1, rng);
    oracles::raise_min_degree(g, delta, rng);
    DominatedSetResult a = dominated_min_degree_greedy(g, delta);
    DominatedSetResult b = dominated_min_degree_greedy(g, delta);
    EXPECT_EQ(a.members, b.members);
    EXPECT_GE(a.members.size(), min_degree_guarantee(12, delta));
    EXPECT_LE(a.members.size(), oracles::max_dominated_size(g));
  }
}

TEST(MinDegree, ZeroSamplingFallsBackToGreedy) {
  LoopGraph g = from_masks(5, 0x3FF, 0);  // K5, min degree 4
  MinDegreeStats stats;
  DominatedSetResult r = dominated_min_degree(g, 4, 1, DominationConfig{0}, &stats);
  EXPECT_TRUE(stats.used_fallback);
  EXPECT_GE(r.members.size(), min_degree_guarantee(5, 4));
}

TEST(MinDegree, PreconditionViolations) {
  LoopGraph g = path(4);
  EXPECT_THROW(dominated_min_degree(g, 2, 1), PreconditionViolation);
  EXPECT_THROW(dominated_min_degree(g, 1, 1), std::invalid_argument);
}

TEST(Simultaneous, DeltaFourteen) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 20; ++round) {
    const int n = 20 + static_cast<int>(rng() % 20);
    LoopGraph gx = oracles::random_loop_graph(n, 0.3, 0.1, rng);
    LoopGraph gy = oracles::random_loop_graph(n, 0.3, 0.1, rng);
    oracles::raise_min_degree(gx, 14, rng);
    oracles::raise_min_degree(gy, 14, rng);
    PairDominatedSetResult r = simultaneous_dominated_min_degree(gx, gy, 14, rng());
    const double need = std::ceil((1 - 2 * epsilon_delta(14)) * n);
    EXPECT_GE(static_cast<double>(r.members.size()), need);
    EXPECT_TRUE(witnesses_valid(gx, r.members, r.in_x));
    EXPECT_TRUE(witnesses_valid(gy, r.members, r.in_y));
  }
  LoopGraph g = from_masks(5, 0x3FF, 0);
  EXPECT_THROW(simultaneous_dominated_min_degree(g, g, 4, 1), std::invalid_argument);
}
