// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "forcing_lab/forcing.hpp"
#include "forcing_lab/matching.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

// a1 a2 a3 = 1 2 3, b1 b2 b3 = 4 5 6, bridge a1b1
fl::Graph bridged_triangles() { return fl::graph_from_string(6, "1-2 1-3 2-3 1-4 4-5 4-6 5-6"); }

std::vector<fl::Graph> graphs_up_to(int n_max) {
  std::vector<fl::Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto pool = fl::build_pool("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n));
    out.insert(out.end(), pool.members.begin(), pool.members.end());
  }
  return out;
}

TEST(MaximumMatching, Examples) {
  EXPECT_EQ(fl::maximum_matching(fl::cycle_graph(6)).count(), 3);
  EXPECT_EQ(fl::maximum_matching(fl::cycle_graph(5)).count(), 2);
  EXPECT_EQ(fl::maximum_matching(fl::complete_graph(3)).count(), 1);
}

TEST(MaximumMatching, AgreesWithSubsetSearch) {
  for (const fl::Graph& g : graphs_up_to(7)) {
    fl::Matching m = fl::maximum_matching(g);
    ASSERT_TRUE(fl::is_matching(g, m));
    EXPECT_EQ(m.count(), oracle::maximum_matching_size(g)) << fl::serialize_graph(g);
  }
}

TEST(IsMatchable, Examples) {
  EXPECT_TRUE(fl::is_matchable(fl::cycle_graph(6)));
  EXPECT_FALSE(fl::is_matchable(fl::cycle_graph(5)));
  fl::Graph k4 = fl::complete_graph(4);
  EXPECT_TRUE(fl::is_matchable(k4, 0));  // K4 minus a spanning 4-cycle
}

TEST(PerfectMatchings, Counts) {
  EXPECT_EQ(fl::perfect_matchings(fl::cycle_graph(6)).size(), 2U);
  EXPECT_EQ(fl::perfect_matchings(fl::complete_graph(4)).size(), 3U);
  EXPECT_EQ(fl::perfect_matchings(fl::complete_bipartite(3, 3)).size(), 6U);
  EXPECT_EQ(fl::count_perfect_matchings(fl::complete_bipartite(3, 3)), 6U);
}

TEST(PerfectMatchings, AgreeWithSubsetSearch) {
  for (const fl::Graph& g : graphs_up_to(8)) {
    if (g.order() % 2) continue;
    std::set<oracle::Mask> got;
    for (const fl::Matching& m : fl::perfect_matchings(g)) {
      EXPECT_TRUE(fl::is_perfect_matching(g, m));
      EXPECT_TRUE(got.insert(oracle::from_edge_mask(m)).second) << "duplicate";
    }
    auto want = oracle::perfect_matchings(g);
    EXPECT_EQ(got, std::set<oracle::Mask>(want.begin(), want.end())) << fl::serialize_graph(g);
  }
}

TEST(PerfectMatchings, DeterministicOrderAndCap) {
  fl::Graph g = fl::complete_graph(6);
  EXPECT_EQ(fl::perfect_matchings(g), fl::perfect_matchings(g));
  EXPECT_THROW(fl::perfect_matchings(g, 5), fl::CapExceeded);
}

TEST(AllowedEdges, Examples) {
  EXPECT_EQ(fl::allowed_edges(fl::cycle_graph(6)), fl::cycle_graph(6).all_edges());
  fl::Graph g = bridged_triangles();
  EXPECT_EQ(fl::allowed_edges(g), g.mask_of({{0, 3}, {1, 2}, {4, 5}}));
  EXPECT_EQ(fl::allowed_edges(fl::complete_graph(4)), fl::complete_graph(4).all_edges());
  EXPECT_THROW(fl::allowed_edges(fl::cycle_graph(5)), fl::PreconditionError);
}

TEST(MatchingCovered, Examples) {
  EXPECT_TRUE(fl::is_matching_covered(fl::cycle_graph(6)));
  // C6 with a pendant path 1-7-8: edge 1-7 is forced, so C6 edges at 1 are not allowed
  EXPECT_FALSE(fl::is_matching_covered(fl::graph_from_string(8, "1-2 2-3 3-4 4-5 5-6 1-6 1-7 7-8")));
  EXPECT_TRUE(fl::is_matching_covered(fl::complete_bipartite(3, 3)));
}

TEST(MatchingCovered, AgreesWithDefinition) {
  for (const fl::Graph& g : graphs_up_to(8)) {
    if (g.order() % 2) continue;
    EXPECT_EQ(fl::is_matching_covered(g), oracle::matching_covered(g)) << fl::serialize_graph(g);
  }
}

TEST(ElementaryComponents, Examples) {
  auto c6 = fl::elementary_components(fl::cycle_graph(6));
  ASSERT_EQ(c6.vertices.size(), 1U);
  EXPECT_EQ(c6.edges[0].count(), 6);

  fl::Graph u = fl::disjoint_union(fl::cycle_graph(4), fl::complete_graph(2));
  EXPECT_EQ(fl::elementary_components(u).vertices.size(), 2U);

  fl::Graph g = bridged_triangles();
  auto ed = fl::elementary_components(g);
  ASSERT_EQ(ed.vertices.size(), 3U);
  for (const fl::EdgeMask& e : ed.edges) EXPECT_EQ(e.count(), 1);
  EXPECT_EQ(ed.forbidden.count(), 4);
}

TEST(ElementaryComponents, ComponentsAreMatchingCovered) {
  for (const fl::Graph& g : graphs_up_to(8)) {
    if (g.order() % 2 || !fl::is_matchable(g)) continue;
    auto ed = fl::elementary_components(g);
    fl::VertexMask all = 0;
    for (std::size_t i = 0; i < ed.vertices.size(); ++i) {
      EXPECT_EQ(all & ed.vertices[i], 0U);
      all |= ed.vertices[i];
      EXPECT_TRUE(fl::is_matching_covered(fl::extract(g, ed.edges[i], ed.vertices[i]).graph));
    }
    EXPECT_EQ(all, g.all_vertices());
  }
}

TEST(ElementaryComponents, ForcingNumbersAreAdditive) {
  const fl::Graph parts[] = {fl::complete_graph(4), fl::cycle_graph(6), fl::complete_bipartite(3, 3),
                             fl::theta_graph({3, 3, 3})};
  for (const fl::Graph& a : parts)
    for (const fl::Graph& b : parts) {
      auto [ga, aa] = fl::gf_and_Af(a);
      auto [gb, ab] = fl::gf_and_Af(b);
      auto [gu, au] = fl::gf_and_Af(fl::disjoint_union(a, b));
      EXPECT_EQ(gu, ga + gb);
      EXPECT_EQ(au, aa + ab);
    }
}

}  // namespace
