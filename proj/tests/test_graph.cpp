// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "forcing_lab/graph.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

fl::Graph k33_as_prism_chords() { return fl::graph_from_string(6, "1-2 2-3 3-4 4-5 5-6 1-6 1-4 2-5 3-6"); }

TEST(ParseGraph, CycleOnFourVertices) {
  fl::Graph g = fl::parse_graph("p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g, fl::cycle_graph(4));
}

TEST(ParseGraph, SingleEdge) {
  fl::Graph g = fl::parse_graph("p 2 1\ne 1 2\n");
  EXPECT_EQ(g.order(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, RejectsLoopWithLineNumber) {
  try {
    fl::parse_graph("p 3 3\ne 1 1\ne 1 2\ne 2 3\n");
    FAIL() << "loop accepted";
  } catch (const fl::ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ParseGraph, RejectsMalformedInput) {
  EXPECT_THROW(fl::parse_graph("p 3 2\ne 1 2\ne 1 2\n"), fl::ParseError);
  EXPECT_THROW(fl::parse_graph("p 3 1\ne 1 4\n"), fl::ParseError);
  EXPECT_THROW(fl::parse_graph("p 3 2\ne 1 2\n"), fl::ParseError);
  EXPECT_THROW(fl::parse_graph("e 1 2\n"), fl::ParseError);
  EXPECT_THROW(fl::parse_graph("p 3 1\nx 1 2\n"), fl::ParseError);
  EXPECT_THROW(fl::parse_graph("p 3 1\ne 2 1\n"), fl::ParseError);
}

TEST(ParseGraph, CommentsAreSkipped) {
  fl::Graph g = fl::parse_graph("# header\np 2 1\n# edge\ne 1 2\n");
  EXPECT_EQ(g.size(), 1);
}

TEST(ParseGraph, SerializeRoundTrip) {
  for (const fl::Graph& g : {fl::cycle_graph(6), fl::complete_graph(5), k33_as_prism_chords()}) {
    std::string text = fl::serialize_graph(g);
    EXPECT_EQ(fl::parse_graph(text), g);
    EXPECT_EQ(fl::serialize_graph(fl::parse_graph(text)), text);
  }
}

TEST(GraphConstruction, RejectsInvalidEdges) {
  EXPECT_THROW(fl::Graph(3, {{0, 0}}), fl::GraphError);
  EXPECT_THROW(fl::Graph(3, {{0, 1}, {1, 0}}), fl::GraphError);
  EXPECT_THROW(fl::Graph(3, {{0, 3}}), fl::GraphError);
}

TEST(GraphConstruction, EdgesAreSortedAndIndexed) {
  fl::Graph g = fl::graph_from_string(4, "3-4 1-2 2-3");
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edge(0), fl::Edge(0, 1));
  EXPECT_EQ(g.edge(2), fl::Edge(2, 3));
  EXPECT_EQ(g.edge_index(3, 2), 2);
  EXPECT_EQ(g.edge_index(0, 3), -1);
}

TEST(Bipartition, EvenCycle) {
  auto c = fl::bipartition(fl::cycle_graph(6));
  ASSERT_TRUE(c.has_value());
  for (int v = 0; v < 6; ++v) EXPECT_EQ((*c)[v], v % 2 == 0 ? fl::Color::black : fl::Color::white);
}

TEST(Bipartition, K4HasNone) { EXPECT_FALSE(fl::bipartition(fl::complete_graph(4)).has_value()); }

TEST(Bipartition, K2) {
  auto c = fl::bipartition(fl::complete_graph(2));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], fl::Color::black);
  EXPECT_EQ((*c)[1], fl::Color::white);
}

TEST(Bipartition, AgreesWithOddCycleSearch) {
  for (int n = 1; n <= 7; ++n) {
    fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n)),
                             [](const fl::Graph& g) {
                               auto c = fl::bipartition(g);
                               EXPECT_EQ(c.has_value(), oracle::bipartite(g)) << fl::serialize_graph(g);
                               if (c)
                                 for (const fl::Edge& e : g.edges()) EXPECT_NE((*c)[e.u], (*c)[e.v]);
                               return true;
                             });
  }
}

TEST(CyclomaticNumber, Examples) {
  EXPECT_EQ(fl::cyclomatic_number(fl::cycle_graph(6)), 1);
  EXPECT_EQ(fl::cyclomatic_number(fl::complete_graph(4)), 3);
  EXPECT_EQ(fl::cyclomatic_number(fl::complete_bipartite(3, 3)), 4);
  EXPECT_THROW(fl::cyclomatic_number(fl::Graph(3, {{0, 1}})), fl::PreconditionError);
}

TEST(Isomorphic, RelabeledCycle) {
  fl::Graph c4 = fl::cycle_graph(4);
  fl::Graph other = fl::graph_from_string(4, "1-3 3-2 2-4 4-1");
  auto m = fl::isomorphic(c4, other);
  ASSERT_TRUE(m.has_value());
  for (const fl::Edge& e : c4.edges()) EXPECT_TRUE(other.adjacent((*m)[e.u], (*m)[e.v]));
}

TEST(Isomorphic, CycleVersusPath) { EXPECT_FALSE(fl::isomorphic(fl::cycle_graph(4), fl::path_graph(4))); }

TEST(Isomorphic, HexagonWithLongChordsIsK33) {
  EXPECT_TRUE(fl::isomorphic(k33_as_prism_chords(), fl::complete_bipartite(3, 3)).has_value());
}

TEST(Isomorphic, AgreesWithPermutationSearchAndCanonicalKey) {
  std::vector<fl::Graph> pool = fl::build_pool("exhaustive:n=5,min=5").members;
  // relabel each graph by a fixed permutation so witnesses are nontrivial
  fl::VertexMap perm{3, 0, 4, 1, 2};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    fl::Graph h = fl::relabel(pool[i], perm);
    auto m = fl::isomorphic(pool[i], h);
    ASSERT_TRUE(m.has_value());
    for (const fl::Edge& e : pool[i].edges()) EXPECT_TRUE(h.adjacent((*m)[e.u], (*m)[e.v]));
    EXPECT_EQ(fl::canonical_key(pool[i]), fl::canonical_key(h));
    for (std::size_t j = i + 1; j < pool.size(); j += 3) {
      const bool expect = oracle::isomorphic(pool[i], pool[j]);
      EXPECT_EQ(fl::isomorphic(pool[i], pool[j]).has_value(), expect);
      EXPECT_EQ(fl::canonical_key(pool[i]) == fl::canonical_key(pool[j]), expect);
    }
  }
}

TEST(Generation, ConnectedGraphCounts) {
  // connected graphs on n unlabelled vertices
  const std::vector<std::uint64_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto spec = fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n) +
                                    ",filter=connected");
    EXPECT_EQ(fl::for_each_pool_member(spec, [](const fl::Graph&) { return true; }), expected[n - 1]) << n;
  }
}

TEST(Extract, RelabelsDensely) {
  fl::Graph g = fl::cycle_graph(6);
  fl::Extracted x = fl::extract(g, g.mask_of({{1, 2}, {2, 3}}));
  EXPECT_EQ(x.graph.order(), 3);
  EXPECT_EQ(x.graph.size(), 2);
  EXPECT_EQ(x.to_host, (std::vector<int>{1, 2, 3}));
}

}  // namespace
