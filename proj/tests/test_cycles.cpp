// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "forcing_lab/cycles.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

std::set<oracle::Mask> as_set(const std::vector<fl::Cycle>& cs) {
  std::set<oracle::Mask> out;
  for (const fl::Cycle& c : cs) out.insert(oracle::from_edge_mask(c.edges));
  return out;
}

std::set<oracle::Mask> as_set(const std::vector<oracle::Mask>& cs) { return {cs.begin(), cs.end()}; }

int count_of_length(const std::vector<fl::Cycle>& cs, int len) {
  int k = 0;
  for (const fl::Cycle& c : cs) k += c.length() == len;
  return k;
}

fl::Graph theta333() { return fl::theta_graph({3, 3, 3}); }

TEST(EnumerateCycles, Counts) {
  EXPECT_EQ(fl::enumerate_cycles(fl::cycle_graph(6)).size(), 1U);
  auto k4 = fl::enumerate_cycles(fl::complete_graph(4));
  EXPECT_EQ(k4.size(), 7U);
  EXPECT_EQ(count_of_length(k4, 3), 4);
  auto k33 = fl::enumerate_cycles(fl::complete_bipartite(3, 3));
  EXPECT_EQ(count_of_length(k33, 4), 9);
  EXPECT_EQ(count_of_length(k33, 6), 6);
  EXPECT_EQ(k33.size(), 15U);
}

TEST(EnumerateCycles, AgreesWithPermutationSearch) {
  for (int n = 3; n <= 7; ++n)
    fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n)),
                             [](const fl::Graph& g) {
                               auto cs = fl::enumerate_cycles(g);
                               EXPECT_EQ(as_set(cs).size(), cs.size()) << "duplicate cycle";
                               EXPECT_EQ(as_set(cs), as_set(oracle::cycles(g))) << fl::serialize_graph(g);
                               return true;
                             });
}

TEST(EnumerateCycles, CapIsReported) {
  EXPECT_THROW(fl::enumerate_cycles(fl::complete_graph(7), 10), fl::CapExceeded);
}

TEST(MakeCycle, CanonicalForm) {
  fl::Graph c6 = fl::cycle_graph(6);
  fl::Cycle c = fl::make_cycle(c6, {3, 2, 1, 0, 5, 4});
  EXPECT_EQ(c.vertices, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(fl::format_cycle(c), "1-2-3-4-5-6-1");
  EXPECT_THROW(fl::make_cycle(c6, {0, 2, 4}), fl::GraphError);
}

TEST(ConformalSubgraph, Examples) {
  fl::Graph c6 = fl::cycle_graph(6);
  EXPECT_TRUE(fl::is_conformal_subgraph(c6, c6.edges()));
  EXPECT_TRUE(fl::is_conformal_subgraph(c6, {{0, 1}}));
  EXPECT_FALSE(fl::is_conformal_subgraph(fl::complete_graph(4), {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_THROW(fl::is_conformal_subgraph(c6, {{0, 3}}), fl::GraphError);
}

TEST(ConformalCycles, Examples) {
  EXPECT_EQ(fl::conformal_cycles(fl::cycle_graph(6)).size(), 1U);
  auto k4 = fl::conformal_cycles(fl::complete_graph(4));
  EXPECT_EQ(k4.size(), 3U);
  EXPECT_EQ(count_of_length(k4, 4), 3);
  auto th = fl::conformal_cycles(theta333());
  EXPECT_EQ(th.size(), 3U);
  EXPECT_EQ(count_of_length(th, 6), 3);
  EXPECT_THROW(fl::conformal_cycles(fl::cycle_graph(5)), fl::PreconditionError);
}

TEST(ConformalCycles, BothCharacterizationsAgreeWithOracle) {
  for (int n = 2; n <= 8; n += 2)
    fl::for_each_pool_member(
        fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n) + ",filter=matchable"),
        [](const fl::Graph& g) {
          auto by_remainder = as_set(fl::conformal_cycles(g));
          EXPECT_EQ(by_remainder, as_set(fl::conformal_cycles_via_matchings(g)));
          EXPECT_EQ(by_remainder, as_set(oracle::conformal_cycles(g))) << fl::serialize_graph(g);
          EXPECT_EQ(by_remainder, as_set(oracle::alternating_somewhere(g)));
          return true;
        });
}

TEST(AlternatingCycles, Examples) {
  fl::Graph c6 = fl::cycle_graph(6);
  for (const fl::Matching& m : fl::perfect_matchings(c6)) EXPECT_EQ(fl::alternating_cycles(c6, m).size(), 1U);

  fl::Graph k4 = fl::complete_graph(4);
  fl::Matching m = k4.mask_of({{0, 1}, {2, 3}});
  auto alt = fl::alternating_cycles(k4, m);
  ASSERT_EQ(alt.size(), 2U);
  for (const fl::Cycle& c : alt) EXPECT_TRUE(m.is_subset_of(c.edges));

  fl::Graph th = theta333();
  // hubs 1, 2; path 1 is 1-3-4-2; M holds its hub edges 1-3 and 4-2
  fl::Matching mt = th.mask_of({{0, 2}, {1, 3}, {4, 5}, {6, 7}});
  ASSERT_TRUE(fl::is_perfect_matching(th, mt));
  auto at = fl::alternating_cycles(th, mt);
  ASSERT_EQ(at.size(), 2U);
  for (const fl::Cycle& c : at) EXPECT_TRUE(c.edges.test(th.edge_index(0, 2)));

  EXPECT_THROW(fl::alternating_cycles(c6, c6.mask_of({{0, 1}})), fl::PreconditionError);
}

TEST(AlternatingCycles, SubsetOfConformalCycles) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=6,min=6,filter=matchable"), [](const fl::Graph& g) {
    auto conf = as_set(fl::conformal_cycles(g));
    for (const fl::Matching& m : fl::perfect_matchings(g))
      for (const fl::Cycle& c : fl::alternating_cycles(g, m)) {
        EXPECT_TRUE(conf.count(oracle::from_edge_mask(c.edges)));
        EXPECT_TRUE(oracle::alternating(oracle::from_edge_mask(c.edges), oracle::from_edge_mask(m)));
      }
    return true;
  });
}

TEST(BnGraph, Examples) {
  EXPECT_TRUE(fl::is_bn_graph(fl::complete_bipartite(3, 3)).bn);
  EXPECT_TRUE(fl::is_bn_graph(fl::complete_graph(4)).bn);
  fl::Graph g = fl::graph_from_string(6, "1-2 1-3 2-3 1-4 4-5 4-6 5-6");
  fl::BnResult r = fl::is_bn_graph(g);
  EXPECT_FALSE(r.bn);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first.length(), 3);
  EXPECT_EQ(r.witness->second.length(), 3);
  EXPECT_EQ(r.witness->first.vertex_set & r.witness->second.vertex_set, 0U);
  EXPECT_THROW(fl::is_bn_graph(fl::cycle_graph(5)), fl::PreconditionError);
}

TEST(BnGraph, AgreesWithBicycleSearch) {
  for (int n = 2; n <= 8; n += 2)
    fl::for_each_pool_member(
        fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n) + ",filter=matchable"),
        [](const fl::Graph& g) {
          fl::BnResult r = fl::is_bn_graph(g);
          EXPECT_EQ(r.bn, !oracle::has_odd_conformal_bicycle(g)) << fl::serialize_graph(g);
          if (!r.bn && !r.witness) ADD_FAILURE() << "no witness";
          if (!r.bn && r.witness) {
            EXPECT_TRUE(r.witness->first.is_odd() && r.witness->second.is_odd());
            EXPECT_EQ(r.witness->first.vertex_set & r.witness->second.vertex_set, 0U);
            fl::VertexMask rest = g.all_vertices() & ~r.witness->first.vertex_set & ~r.witness->second.vertex_set;
            EXPECT_TRUE(fl::is_matching(g, r.witness->remainder_matching));
            EXPECT_EQ(g.endpoints(r.witness->remainder_matching), rest);
          }
          return true;
        });
}

TEST(BnGraph, ClosedUnderMatchingCoveredConformalSubgraphs) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=8,min=8,filter=mc+bn"), [](const fl::Graph& g) {
    for (const fl::EdgeMask& h : fl::matching_covered_conformal_subgraphs(g))
      EXPECT_TRUE(fl::is_bn_graph(fl::extract(g, h).graph).bn) << fl::serialize_graph(g);
    return true;
  });
}

}  // namespace
