// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>

#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/verify.hpp"

namespace fl = forcing_lab;

namespace {

const fl::Catalog& catalog() {
  static const fl::Catalog cat = fl::load_catalog(fl::read_text_file(FORCING_LAB_CATALOG_FILE));
  return cat;
}

int parse_error_line(std::string_view text) {
  try {
    fl::parse_catalog(text);
  } catch (const fl::ParseError& e) {
    return e.line();
  }
  return 0;
}

fl::SurgeryResult stretch(const fl::Graph& g, const fl::Edge& e) {
  fl::SubdivisionPlan plan;
  plan.entries.emplace(e, 3);
  return fl::bisubdivide(g, plan);
}

constexpr std::string_view kK4Entry =
    "[graph K]\nfamily G0\nvertices 4\nedges 1-2 1-3 1-4 2-3 2-4 3-4\ngf 2\naf 2\nreplaceable_set 1-2 3-4\n";

TEST(Catalog, ParsesMinimalEntry) {
  fl::Catalog c = fl::parse_catalog(kK4Entry);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].name, "K");
  EXPECT_EQ(c[0].family, "G0");
  EXPECT_EQ(c[0].graph, fl::complete_graph(4));
  ASSERT_EQ(c[0].replaceable_sets.size(), 1U);
  EXPECT_EQ(c[0].replaceable_sets[0], c[0].graph.mask_of({{0, 1}, {2, 3}}));
  EXPECT_EQ(c[0].line, 1);
}

TEST(Catalog, ReportsErrorLines) {
  EXPECT_EQ(parse_error_line("family A\n"), 1);
  EXPECT_EQ(parse_error_line("[graph K]\nfamily X\n"), 2);
  EXPECT_EQ(parse_error_line("[graph K]\nfamily A\nedges 1-2\n"), 3);
  EXPECT_EQ(parse_error_line("[graph K]\nfamily A\nvertices 2\nedges 1-2\ngf 1\naf 1\nstrong 1-2\n"), 7);
  EXPECT_EQ(parse_error_line("[graph K]\nfamily A\nvertices 2\nedges 1-2\ngf 1\naf 1\nreplaceable_set 1-3\n"), 7);
  EXPECT_EQ(parse_error_line(std::string(kK4Entry) + std::string(kK4Entry)), 8);
  EXPECT_EQ(parse_error_line("[graph K]\nfamily A\nvertices 2\nedges 1-2\ngf 1\n"), 1);
  EXPECT_EQ(parse_error_line("[graph K]\nfamily G1\nbase Z\nvertices 2\nedges 1-2\ngf 0\naf 0\n"), 1);
}

TEST(Catalog, LoadChecksDeclaredValues) {
  EXPECT_NO_THROW(fl::load_catalog(kK4Entry));
  std::string bad(kK4Entry);
  bad.replace(bad.find("gf 2"), 4, "gf 3");
  EXPECT_NO_THROW(fl::parse_catalog(bad));
  EXPECT_THROW(fl::load_catalog(bad), fl::ParseError);
  EXPECT_THROW(fl::read_text_file("/nonexistent/forcing_lab.cat"), std::runtime_error);
}

TEST(Catalog, ShippedCatalog) {
  const fl::Catalog& c = catalog();
  std::map<std::string, int> by_family;
  for (const fl::CatalogEntry& e : c) ++by_family[e.family];
  EXPECT_EQ(by_family["A"], 4);
  EXPECT_EQ(by_family["D"], 25);
  EXPECT_EQ(by_family["G0"] + by_family["G1"] + by_family["G2"] + by_family["G3"], 26);
  EXPECT_EQ(fl::select_family(c, {"A", "D"}).size(), 29U);
  EXPECT_EQ(fl::select_family(c, {"A"}).front()->name, "A1");
  EXPECT_EQ(fl::find_entry(c, "H1,4,5")->family, "G2");
  EXPECT_EQ(fl::find_entry(c, "H3,4")->family, "G3");
  EXPECT_EQ(fl::find_entry(c, "Z"), nullptr);
  for (const fl::CatalogEntry& e : c)
    if (e.family[0] == 'G') {
      auto h = fl::find_hamilton_cycle(e.graph);
      ASSERT_TRUE(h.has_value()) << e.name;
      for (int v = 0; v < e.graph.order(); ++v)
        EXPECT_TRUE(e.graph.adjacent(v, (v + 1) % e.graph.order())) << e.name;
    }
}

TEST(HamiltonCycles, Counts) {
  int k33 = 0;
  EXPECT_TRUE(fl::for_each_hamilton_cycle(fl::complete_bipartite(3, 3), [&](const fl::Cycle&) { return ++k33, true; }));
  EXPECT_EQ(k33, 6);
  int k4 = 0;
  EXPECT_TRUE(fl::for_each_hamilton_cycle(fl::complete_graph(4), [&](const fl::Cycle&) { return ++k4, true; }));
  EXPECT_EQ(k4, 3);
  EXPECT_FALSE(fl::find_hamilton_cycle(fl::path_graph(4)).has_value());
  EXPECT_FALSE(fl::for_each_hamilton_cycle(fl::complete_graph(6), [](const fl::Cycle&) { return true; }, 5));
}

TEST(ChordProfile, K4) {
  fl::Graph k4 = fl::complete_graph(4);
  fl::ChordProfile p = fl::chord_profile(k4, fl::make_cycle(k4, {0, 1, 2, 3}));
  ASSERT_EQ(p.chords.size(), 2U);
  EXPECT_EQ(p.chords[0].edge, fl::Edge(0, 2));
  EXPECT_EQ(p.chords[0].role, fl::ChordRole::black);
  EXPECT_EQ(p.chords[1].role, fl::ChordRole::white);
  EXPECT_EQ(p.n_black, 1);
  EXPECT_EQ(p.n_white, 1);
  ASSERT_EQ(p.pairs.size(), 1U);
  EXPECT_EQ(p.pairs[0].relation, fl::PairRelation::crossed);
  EXPECT_THROW(fl::chord_profile(k4, fl::make_cycle(k4, {0, 1, 2})), fl::PreconditionError);
}

TEST(ChordProfile, BipartiteRelations) {
  fl::Graph c8 = fl::cycle_graph(8);
  auto rel = [&](std::string_view chords) {
    fl::Graph g = c8;
    for (const fl::Edge& e : fl::parse_edge_list(chords, 8)) g = g.with_edge(e);
    fl::ChordProfile p = fl::chord_profile(g, fl::make_cycle(g, {0, 1, 2, 3, 4, 5, 6, 7}));
    for (const fl::Chord& c : p.chords) EXPECT_EQ(c.role, fl::ChordRole::bicolorable);
    return p.pairs.at(0).relation;
  };
  EXPECT_EQ(rel("1-4 1-6"), fl::PairRelation::adjacent);
  EXPECT_EQ(rel("1-4 5-8"), fl::PairRelation::parallel);
  EXPECT_EQ(rel("1-6 2-5"), fl::PairRelation::parallel);
  EXPECT_EQ(rel("1-4 2-7"), fl::PairRelation::crossed);
  EXPECT_EQ(rel("1-6 3-8"), fl::PairRelation::crossed);
  EXPECT_EQ(rel("1-4 2-5"), fl::PairRelation::strongly_crossed);
}

TEST(ClassifyBipartite, Examples) {
  EXPECT_EQ(fl::classify_bipartite(fl::cycle_graph(6)).family, fl::Family::B0);
  EXPECT_EQ(fl::classify_bipartite(fl::cycle_graph(6).with_edge(fl::Edge(0, 3))).family, fl::Family::B1);
  fl::Graph two = fl::graph_from_string(8, "1-2 2-3 3-4 4-5 5-6 6-7 7-8 1-8 1-4 5-8");
  EXPECT_EQ(fl::classify_bipartite(two).family, fl::Family::B3);
  EXPECT_EQ(fl::classify_bipartite(fl::complete_bipartite(3, 3)).family, fl::Family::none);
  for (const fl::CatalogEntry* a : fl::select_family(catalog(), {"A"}))
    EXPECT_EQ(fl::classify_bipartite(a->graph).family, fl::Family::none) << a->name;
  EXPECT_THROW(fl::classify_bipartite(fl::complete_graph(4)), fl::PreconditionError);
  EXPECT_THROW(fl::classify_bipartite(fl::complete_graph(2)), fl::PreconditionError);
  EXPECT_EQ(fl::classify_bipartite(fl::complete_bipartite(4, 4), 3).family, fl::Family::unknown);
}

TEST(ClassifyBipartite, AgreesWithUniformity) {
  fl::UniformityOracle su;
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=8,min=4,filter=bipartite+mc"), [&](const fl::Graph& g) {
    fl::FamilyLabel l = fl::classify_bipartite(g);
    EXPECT_NE(l.family, fl::Family::unknown);
    EXPECT_EQ(l.family != fl::Family::none, su.check(g).verdict == fl::Verdict::yes) << fl::serialize_graph(g);
    return true;
  });
}

TEST(ClassifyBn, K4AndItsBisubdivisions) {
  fl::Graph k4 = fl::complete_graph(4);
  fl::FamilyLabel l = fl::classify_bn(k4, catalog());
  EXPECT_EQ(l.family, fl::Family::G0);
  EXPECT_EQ(l.base, "H1");
  EXPECT_TRUE(fl::validate_bn_label(k4, catalog(), l));

  fl::Graph s = stretch(k4, fl::Edge(0, 1)).graph;
  fl::FamilyLabel ls = fl::classify_bn(s, catalog());
  EXPECT_EQ(ls.family, fl::Family::G0);
  EXPECT_EQ(ls.base, "H1");
  EXPECT_TRUE(fl::validate_bn_label(s, catalog(), ls));
  ASSERT_TRUE(ls.profile.has_value());
  EXPECT_EQ(ls.profile->hamilton_cycle.length(), 6);

  fl::FamilyLabel forged = ls;
  forged.base = "H2";
  EXPECT_FALSE(fl::validate_bn_label(s, catalog(), forged));

  EXPECT_THROW(fl::classify_bn(fl::cycle_graph(6), catalog()), fl::PreconditionError);
  EXPECT_THROW(fl::classify_bn(fl::graph_from_string(6, "1-2 1-3 2-3 1-4 4-5 4-6 5-6"), catalog()),
               fl::PreconditionError);
}

TEST(ClassifyBn, EveryFundamentalGraphIsRecognized) {
  // the earliest family wins when a graph lies in two families
  for (const fl::CatalogEntry& e : catalog()) {
    if (e.family[0] != 'G') continue;
    fl::FamilyLabel l = fl::classify_bn(e.graph, catalog());
    ASSERT_NE(l.family, fl::Family::none) << e.name;
    EXPECT_LE(fl::to_string(l.family), std::string_view(e.family)) << e.name;
    EXPECT_TRUE(fl::validate_bn_label(e.graph, catalog(), l)) << e.name;
    const fl::CatalogEntry* base = fl::find_entry(catalog(), l.base);
    ASSERT_NE(base, nullptr);
    if (base != &e) EXPECT_EQ(fl::canonical_key(base->graph), fl::canonical_key(e.graph)) << e.name;
  }
}

TEST(ClassifyBn, GadgetInversion) {
  const fl::CatalogEntry* h = fl::find_entry(catalog(), "H1,4");
  ASSERT_NE(h, nullptr);
  ASSERT_FALSE(h->strong_replaceable_sets.empty());
  fl::SubdivisionPlan plan;
  h->strong_replaceable_sets[0].for_each([&](int e) { plan.entries.emplace(h->graph.edge(e), 1); });
  fl::Graph q = fl::quad_subdivide(h->graph, plan).graph;
  fl::FamilyLabel l = fl::classify_bn(q, catalog());
  EXPECT_EQ(l.family, fl::Family::G3);
  EXPECT_EQ(l.base, "H1,4");
  EXPECT_EQ(l.gadgets.size(), 2U);
  EXPECT_TRUE(fl::validate_bn_label(q, catalog(), l));
}

TEST(ClassifyBn, FundamentalGraphsAttainGfWithCompatibleCycles) {
  // some perfect matching carries gf pairwise compatible alternating cycles
  for (const fl::CatalogEntry& e : catalog()) {
    if (e.family[0] != 'G') continue;
    fl::ForcingReport r = fl::forcing_report(e.graph, {.with_c_prime = true});
    int best = 0;
    for (const fl::MatchingEntry& m : r.per_matching) best = std::max(best, *m.c_prime);
    EXPECT_EQ(best, r.gf) << e.name;
  }
}

}  // namespace
