// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "forcing_lab/minors.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

const fl::Catalog& catalog() {
  static const fl::Catalog cat = fl::parse_catalog(fl::read_text_file(FORCING_LAB_CATALOG_FILE));
  return cat;
}

const fl::Graph& entry(std::string_view name) {
  const fl::CatalogEntry* e = fl::find_entry(catalog(), name);
  if (e == nullptr) throw std::runtime_error("missing catalog entry " + std::string(name));
  return e->graph;
}

TEST(FindConformalMinor, K33ContainsA4) {
  fl::Graph k33 = fl::complete_bipartite(3, 3);
  fl::MinorSearch s = fl::find_conformal_minor(k33, entry("A4"));
  ASSERT_EQ(s.status, fl::MinorStatus::found);
  ASSERT_TRUE(s.embedding.has_value());
  EXPECT_TRUE(fl::validate_embedding(k33, entry("A4"), *s.embedding));
  EXPECT_EQ(s.embedding->union_edges, k33.all_edges());
}

TEST(FindConformalMinor, TooSmallHost) {
  EXPECT_EQ(fl::find_conformal_minor(fl::cycle_graph(6), fl::theta_graph({3, 3, 3})).status,
            fl::MinorStatus::absent);
  EXPECT_EQ(fl::find_conformal_minor(fl::cycle_graph(8), entry("A4")).status, fl::MinorStatus::absent);
}

TEST(FindConformalMinor, DecagonWithTwoChords) {
  fl::Graph g = fl::graph_from_string(10, "1-2 2-3 3-4 4-5 5-6 6-7 7-8 8-9 9-10 1-10 1-4 6-9");
  fl::MinorSearch s = fl::find_conformal_minor(g, entry("A3"));
  ASSERT_EQ(s.status, fl::MinorStatus::found);
  EXPECT_TRUE(fl::validate_embedding(g, entry("A3"), *s.embedding));
  EXPECT_EQ(fl::find_conformal_minor(g, entry("A4")).status, fl::MinorStatus::absent);
}

TEST(FindConformalMinor, NonconformalPlacementIsRejected) {
  // pendant vertices 9 and 10 at the hubs: the only theta leaves them unmatched
  fl::Graph th = fl::theta_graph({3, 3, 3});
  std::vector<fl::Edge> es = th.edges();
  es.emplace_back(0, 8);
  es.emplace_back(1, 9);
  fl::Graph pendant(10, es);
  ASSERT_TRUE(fl::is_matchable(pendant));
  EXPECT_EQ(fl::find_conformal_minor(pendant, th).status, fl::MinorStatus::absent);
  EXPECT_FALSE(oracle::has_conformal_minor(pendant, th));
  fl::Graph joined = pendant.with_edge(fl::Edge(8, 9));
  EXPECT_EQ(fl::find_conformal_minor(joined, th).status, fl::MinorStatus::found);
}

TEST(FindConformalMinor, BudgetGivesUnknown) {
  fl::MinorSearch s = fl::find_conformal_minor(fl::complete_graph(8), entry("A4"), 1);
  EXPECT_NE(s.status, fl::MinorStatus::absent);
}

TEST(FindConformalMinor, AgreesWithEdgeSubsetSearch) {
  const std::vector<fl::Graph> patterns{fl::cycle_graph(4), fl::complete_graph(4), fl::theta_graph({1, 3, 3}),
                                        fl::complete_bipartite(3, 3)};
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=6,min=4,filter=matchable"), [&](const fl::Graph& g) {
    for (const fl::Graph& j : patterns) {
      fl::MinorSearch s = fl::find_conformal_minor(g, j);
      EXPECT_NE(s.status, fl::MinorStatus::unknown);
      EXPECT_EQ(s.status == fl::MinorStatus::found, oracle::has_conformal_minor(g, j)) << fl::serialize_graph(g);
      if (s.embedding) EXPECT_TRUE(fl::validate_embedding(g, j, *s.embedding));
    }
    return true;
  });
}

TEST(ValidateEmbedding, RejectsCorruptedWitness) {
  fl::Graph k33 = fl::complete_bipartite(3, 3);
  fl::MinorSearch s = fl::find_conformal_minor(k33, entry("A4"));
  ASSERT_TRUE(s.embedding.has_value());
  fl::MinorEmbedding bad = *s.embedding;
  std::swap(bad.branch_map[0], bad.branch_map[3]);
  EXPECT_FALSE(fl::validate_embedding(k33, entry("A4"), bad));
  bad = *s.embedding;
  bad.path_map[0].push_back(bad.path_map[0].back());
  EXPECT_FALSE(fl::validate_embedding(k33, entry("A4"), bad));
}

TEST(ScreenCatalog, Examples) {
  auto ad = fl::select_family(catalog(), {"A", "D"});
  EXPECT_TRUE(fl::screen_catalog(fl::cycle_graph(8), ad).empty());
  auto hits = fl::screen_catalog(fl::complete_bipartite(3, 3), ad);
  ASSERT_EQ(hits.size(), 1U);
  EXPECT_EQ(hits[0].name, "A4");
  EXPECT_EQ(hits[0].status, fl::MinorStatus::found);
}

TEST(ScreenCatalog, JobsDoNotChangeTheAnswer) {
  auto ad = fl::select_family(catalog(), {"A", "D"});
  fl::Graph g = entry("D25");
  auto one = fl::screen_catalog(g, ad, fl::kDefaultNodeBudget, 1);
  auto three = fl::screen_catalog(g, ad, fl::kDefaultNodeBudget, 3);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].name, three[i].name);
  EXPECT_TRUE(std::any_of(one.begin(), one.end(), [](const fl::ScreenHit& h) { return h.name == "D25"; }));
}

TEST(MinorLattice, AgreesWithScreening) {
  auto ad = fl::select_family(catalog(), {"A", "D"});
  fl::MinorLattice lattice(ad);
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=8,min=6,filter=mc"),
                           [&](const fl::Graph& g) {
                             EXPECT_EQ(lattice.contains_any(g), !fl::screen_catalog(g, ad).empty())
                                 << fl::serialize_graph(g);
                             return true;
                           });
  EXPECT_GT(lattice.cache_size(), 0U);
  EXPECT_THROW(lattice.contains_any(fl::cycle_graph(5)), fl::PreconditionError);
}

}  // namespace
