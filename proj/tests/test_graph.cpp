#include "sz/graph.hpp"

#include <random>

#include <gtest/gtest.h>

#include "sz/minplus.hpp"

namespace sz {
namespace {

constexpr const char* kGPrime = "p sp 3 2\na 1 2 2\na 1 3 4\n";

TEST(ParseGraphTest, CounterExample) {
  const Graph g = parse_graph(kGPrime);
  EXPECT_EQ(g.nodes(), 3);
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2, 4}));
  EXPECT_EQ(g.max_cost(), 4);
}

TEST(ParseGraphTest, SingleNode) {
  const Graph g = parse_graph("p sp 1 0\n");
  EXPECT_EQ(g.nodes(), 1);
  EXPECT_TRUE(g.edges().empty());
}

TEST(ParseGraphTest, CommentsBlankLinesAndCrlf) {
  const Graph g = parse_graph("c hello\r\n\r\np sp 2 1\r\nc mid\r\na 2 1 7\r\n");
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 7}));
}

TEST(ParseGraphTest, DuplicateEdgesCollapseToMinimum) {
  const Graph g = parse_graph("p sp 2 2\na 1 2 5\na 2 1 3\n");
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].cost, 3);
}

struct BadInput {
  const char* text;
  std::size_t line;
};

class ParseGraphErrorTest : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseGraphErrorTest, ReportsLine) {
  try {
    parse_graph(GetParam().text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, ParseGraphErrorTest,
    ::testing::Values(BadInput{"p sp 2 1\na 1 1 3\n", 2},          // self-loop
                      BadInput{"p sp 2 1\na 1 2 0\n", 2},          // non-positive cost
                      BadInput{"p sp 2 1\na 1 2 -4\n", 2},         // negative cost
                      BadInput{"p sp 2 1\na 1 2 2.5\n", 2},        // non-integer cost
                      BadInput{"p sp 2 1\na 1 3 1\n", 2},          // id out of range
                      BadInput{"p sp 2 1\na 0 2 1\n", 2},          // id out of range
                      BadInput{"p sp 2 1\na 1 2\n", 2},            // missing field
                      BadInput{"a 1 2 1\np sp 2 1\n", 1},          // arc before header
                      BadInput{"p sp 2\n", 1},                     // short header
                      BadInput{"p sp 0 0\n", 1},                   // no nodes
                      BadInput{"p sp 2 1\nx 1 2 1\n", 2},          // unknown line
                      BadInput{"p sp 2 1\na 1 2 2097152\n", 2},    // above the cost cap
                      BadInput{"p sp 3 2\na 1 2 1\n", 2},          // edge count mismatch
                      BadInput{"c nothing\n", 1}));                // no header

TEST(ParseGraphTest, CostCapIsConfigurable) {
  EXPECT_NO_THROW(parse_graph("p sp 2 1\na 1 2 2097152\n", std::int64_t{1} << 22));
  EXPECT_THROW(parse_graph("p sp 2 1\na 1 2 9\n", 8), ParseError);
}

TEST(GraphTest, ConstructorValidates) {
  EXPECT_THROW(Graph(0, {}), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 0, 1}}), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 2, 1}}), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 1, 0}}), InvalidInput);
}

TEST(BuildMatrixTest, Examples) {
  EXPECT_EQ(build_matrix(parse_graph(kGPrime)),
            (WeightMatrix{{0, 2, 4}, {2, 0, kInf}, {4, kInf, 0}}));
  EXPECT_EQ(build_matrix(Graph(2, {})), (WeightMatrix{{0, kInf}, {kInf, 0}}));
}

TEST(BuildMatrixTest, RoundTripsEdgeSet) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_connected_graph(2 + seed % 12, 0.5, 9, seed);
    const WeightMatrix d = build_matrix(g);
    EXPECT_TRUE(is_symmetric(d));
    std::vector<Edge> recovered;
    for (Index i = 0; i < d.size(); ++i) {
      EXPECT_EQ(d(i, i), ExtInt(0));
      for (Index j = i + 1; j < d.size(); ++j) {
        if (d(i, j).is_finite()) recovered.push_back({i, j, d(i, j).value()});
      }
    }
    EXPECT_EQ(Graph(g.nodes(), recovered), g);
  }
}

TEST(RenderGraphTest, ParseInvertsRender) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index n = 1 + static_cast<Index>(rng() % 15);
    const Graph g = random_connected_graph(n, 0.4, 16, seed);
    EXPECT_EQ(parse_graph(render_graph(g)), g);
    EXPECT_EQ(render_graph(parse_graph(render_graph(g))), render_graph(g));
  }
  EXPECT_EQ(render_graph(parse_graph("p sp 3 2\na 3 1 4\na 2 1 2\n")), kGPrime);
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(components(parse_graph(kGPrime)).count(), 1u);
  const ComponentPartition p = components(Graph(4, {{0, 1, 1}, {2, 3, 1}}));
  ASSERT_EQ(p.count(), 2u);
  EXPECT_EQ(p.members[0], (std::vector<Index>{0, 1}));
  EXPECT_EQ(p.members[1], (std::vector<Index>{2, 3}));
  EXPECT_EQ(p.component_of, (std::vector<Index>{0, 0, 1, 1}));
}

TEST(ComponentsTest, ForestIdentity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 30);
    // Random forest: each node links to an earlier node or starts a tree.
    std::vector<Edge> edges;
    for (Index v = 1; v < n; ++v) {
      if (rng() % 3 != 0) edges.push_back({static_cast<Index>(rng() % v), v, 1});
    }
    const Graph g(n, edges);
    EXPECT_EQ(components(g).count(), static_cast<std::size_t>(n) - edges.size());
  }
}

TEST(InducedSubgraphTest, Renumbers) {
  const Graph g(5, {{0, 3, 2}, {3, 4, 5}, {1, 2, 1}});
  const Graph sub = induced_subgraph(g, {0, 3, 4});
  EXPECT_EQ(sub, Graph(3, {{0, 1, 2}, {1, 2, 5}}));
}

TEST(RandomGraphTest, DeterministicAndConnected) {
  const Graph a = random_connected_graph(20, 0.2, 7, 42);
  const Graph b = random_connected_graph(20, 0.2, 7, 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(components(a).count(), 1u);
  EXPECT_LE(a.max_cost(), 7);
  EXPECT_THROW(random_connected_graph(5, 0.0, 3, 1, 10), InvalidArgument);
  EXPECT_EQ(random_connected_graph(1, 0.0, 3, 1).nodes(), 1);
}

}  // namespace
}  // namespace sz
