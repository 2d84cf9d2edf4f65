#include "minvc/exact.hpp"

#include <gtest/gtest.h>

#include <random>

#include "minvc/lp.hpp"
#include "minvc/rng.hpp"
#include "oracles.hpp"

using namespace minvc;

TEST(Exact, SmallKnownGraphs) {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(solve_exact(k3).size, 2);
  Graph edge(2, {{0, 1}});
  EXPECT_EQ(solve_exact(edge).size, 1);
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  ExactResult s = solve_exact(star);
  EXPECT_EQ(s.size, 1);
  EXPECT_EQ(s.cover, (BinaryConfig{1, 0, 0, 0, 0}));
  Graph empty(4, {});
  EXPECT_EQ(solve_exact(empty).size, 0);
}

TEST(Exact, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 12);  // up to 16
    Graph g = generate_er({n, 1.0 + 4.0 * canonical_unit(rng), rng()});
    ExactResult result = solve_exact(g);
    EXPECT_TRUE(result.proven_optimal);
    EXPECT_EQ(result.size, test::brute_force_min_cover(g)) << "trial " << trial;
    CoverStats stats = evaluate_cover(g, result.cover);
    EXPECT_EQ(stats.violated_edges, 0);
    EXPECT_EQ(stats.cover_size, result.size);
  }
}

TEST(Exact, RootBoundSandwich) {
  Graph g = generate_er({40, 3.0, 5});
  LpSolution lp = solve_lp_relaxation(g);
  ExactResult result = solve_exact(g);
  ASSERT_TRUE(result.proven_optimal);
  EXPECT_LE(lp.objective, result.size + 1e-12);
  EXPECT_LE(result.size, 2 * lp.objective + 1e-12);
}

TEST(Exact, BudgetExhaustionKeepsFeasibleIncumbent) {
  Graph g = generate_er({60, 5.0, 17});
  ExactResult full = solve_exact(g);
  ASSERT_TRUE(full.proven_optimal);
  ExactResult cut = solve_exact(g, {1, true});
  EXPECT_FALSE(cut.proven_optimal);
  EXPECT_EQ(cut.nodes_explored, 1);
  EXPECT_EQ(evaluate_cover(g, cut.cover).violated_edges, 0);
  EXPECT_GE(cut.size, full.size);
}

TEST(Exact, NtFixingNeverExploresMoreNodes) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = generate_er({30, 2.0 + 2.0 * canonical_unit(rng), rng()});
    ExactResult with_nt = solve_exact(g, {0, true});
    ExactResult without_nt = solve_exact(g, {0, false});
    EXPECT_EQ(with_nt.size, without_nt.size);
    EXPECT_LE(with_nt.nodes_explored, without_nt.nodes_explored);
  }
}

TEST(Exact, DeterministicNodeCounts) {
  Graph g = generate_er({50, 3.0, 9});
  ExactResult a = solve_exact(g);
  ExactResult b = solve_exact(g);
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.cover, b.cover);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}
