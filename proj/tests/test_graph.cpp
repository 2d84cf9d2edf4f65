#include "minvc/graph.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "minvc/rng.hpp"

using namespace minvc;

TEST(Graph, CanonicalizesAndValidates) {
  Graph g(3, {{2, 0}, {1, 2}});
  EXPECT_EQ(g.num_vertices(), 3);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));

  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Graph, DegreesAndAdjacency) {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(k3.degrees(), (std::vector<int>{2, 2, 2}));
  auto adj = k3.adjacency();
  EXPECT_EQ(adj[0], (std::vector<int>{1, 2}));
}

TEST(Graph, InducedSubgraph) {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Graph sub = g.induced_subgraph({1, 2, 3});
  EXPECT_EQ(sub.num_vertices(), 3);
  EXPECT_EQ(sub.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_THROW(g.induced_subgraph({3, 1}), std::invalid_argument);
  EXPECT_THROW(g.induced_subgraph({1, 1}), std::invalid_argument);
}

TEST(GenerateEr, BoundaryProbabilities) {
  EXPECT_EQ(generate_er({4, 0.0, 7}).num_edges(), 0u);
  EXPECT_EQ(generate_er({4, 4.0, 7}).num_edges(), 6u);  // K4
  EXPECT_THROW(generate_er({4, 4.5, 7}), std::invalid_argument);
  EXPECT_THROW(generate_er({4, -1.0, 7}), std::invalid_argument);
}

TEST(GenerateEr, DeterministicPerSeed) {
  Graph a = generate_er({100, 3.0, 42});
  Graph b = generate_er({100, 3.0, 42});
  Graph c = generate_er({100, 3.0, 43});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

// Binomial(N(N-1)/2, c/N): mean 2998.5, sigma ~54.7 for N=2000, c=3.
TEST(GenerateEr, EdgeCountWithinFiveSigma) {
  Graph g = generate_er({2000, 3.0, 42});
  const double mean = 3.0 / 2000 * (2000.0 * 1999.0 / 2.0);
  EXPECT_NEAR(static_cast<double>(g.num_edges()), mean, 274.0);
}

TEST(GenerateEr, PairFrequencyWithinThreeSigma) {
  const int n = 6;
  const double c = 3.0;  // p = 0.5
  const int trials = 2000;
  std::vector<int> count(n * n, 0);
  for (int t = 0; t < trials; ++t) {
    Graph g = generate_er({n, c, mix_seed({99, static_cast<std::uint64_t>(t)})});
    for (const auto& [u, v] : g.edges()) ++count[u * n + v];
  }
  const double p = c / n;
  const double sigma = std::sqrt(trials * p * (1 - p));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      EXPECT_NEAR(count[u * n + v], trials * p, 3 * sigma)
          << "pair (" << u << "," << v << ")";
    }
  }
}

TEST(GraphIo, ParsesSpecFormat) {
  std::istringstream in("3\n0 1\n1 2\n");
  Graph g = load_graph(in);
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphIo, AcceptsCommentsBlanksAndEitherOrder) {
  std::istringstream in("# header\n4\n\n2 1  # trailing comment\n0 3\n");
  Graph g = load_graph(in);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
}

TEST(GraphIo, RoundTripIdentity) {
  Graph k4 = generate_er({4, 4.0, 0});
  std::ostringstream out;
  save_graph(k4, out, "k4 golden");
  std::istringstream in(out.str());
  EXPECT_EQ(load_graph(in), k4);

  Graph random = generate_er({50, 4.0, 11});
  std::ostringstream out2;
  save_graph(random, out2);
  std::istringstream in2(out2.str());
  EXPECT_EQ(load_graph(in2), random);
}

TEST(GraphIo, ErrorsNameTheLine) {
  std::istringstream out_of_range("3\n0 3\n");
  try {
    load_graph(out_of_range);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "vertex index out of range, line 2");
  }

  std::istringstream duplicate("3\n0 1\n1 0\n");
  EXPECT_THROW(load_graph(duplicate), ParseError);
  std::istringstream malformed("3\n0 1 2\n");
  EXPECT_THROW(load_graph(malformed), ParseError);
  std::istringstream self_loop("3\n1 1\n");
  EXPECT_THROW(load_graph(self_loop), ParseError);
  std::istringstream missing_header("# only a comment\n");
  EXPECT_THROW(load_graph(missing_header), ParseError);
}
