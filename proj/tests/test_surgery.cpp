// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/surgery.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

fl::EdgeMask mask_of(const fl::Graph& g, std::string_view edges) {
  return g.mask_of(fl::parse_edge_list(edges, g.order()));
}

fl::SurgeryResult stretch(const fl::Graph& g, const fl::Edge& e, int length = 3) {
  fl::SubdivisionPlan plan;
  plan.entries.emplace(e, length);
  return fl::bisubdivide(g, plan);
}

TEST(ParsePlan, Examples) {
  fl::Graph k4 = fl::complete_graph(4);
  fl::SubdivisionPlan p = fl::parse_plan(k4, "1-2:3,3-4:5");
  ASSERT_EQ(p.entries.size(), 2U);
  EXPECT_EQ(p.entries.at(fl::Edge(0, 1)), 3);
  EXPECT_EQ(p.entries.at(fl::Edge(2, 3)), 5);
  EXPECT_THROW(fl::parse_plan(fl::cycle_graph(4), "1-3:3"), fl::GraphError);
  EXPECT_THROW(fl::parse_plan(k4, "1-2"), fl::ParseError);
}

TEST(Bisubdivide, SingleEdge) {
  fl::Graph c4 = fl::cycle_graph(4);
  fl::SurgeryResult r = stretch(c4, fl::Edge(0, 1));
  EXPECT_EQ(r.graph.order(), 6);
  EXPECT_EQ(r.graph.size(), 6);
  EXPECT_TRUE(fl::isomorphic(r.graph, fl::cycle_graph(6)).has_value());
  EXPECT_EQ(r.original_order, 4);
  EXPECT_EQ(r.replacement_paths.at(fl::Edge(0, 1)), (std::vector<int>{0, 4, 5, 1}));
  EXPECT_EQ(r.origin, (std::vector<fl::Edge>{fl::Edge(0, 1), fl::Edge(0, 1)}));
}

TEST(Bisubdivide, RejectsBadPlans) {
  fl::Graph c4 = fl::cycle_graph(4);
  EXPECT_THROW(stretch(c4, fl::Edge(0, 1), 2), fl::GraphError);
  EXPECT_THROW(stretch(c4, fl::Edge(0, 1), -1), fl::GraphError);
  EXPECT_THROW(stretch(c4, fl::Edge(0, 2)), fl::GraphError);
}

TEST(MatchingBijection, Examples) {
  fl::Graph c4 = fl::cycle_graph(4);
  fl::SurgeryResult r = stretch(c4, fl::Edge(0, 1));
  fl::Matching in = mask_of(c4, "1-2 3-4");
  fl::Matching out = fl::matching_bijection(c4, r, in);
  EXPECT_TRUE(fl::is_perfect_matching(r.graph, out));
  EXPECT_EQ(out, r.graph.mask_of({{0, 4}, {5, 1}, {2, 3}}));
  fl::Matching other = fl::matching_bijection(c4, r, mask_of(c4, "1-4 2-3"));
  EXPECT_EQ(other, r.graph.mask_of({{0, 3}, {4, 5}, {1, 2}}));
  EXPECT_THROW(fl::matching_bijection(c4, r, mask_of(c4, "1-2")), fl::PreconditionError);
}

TEST(MatchingBijection, IsABijectionOnSmallGraphs) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=6,min=4,filter=matchable"), [](const fl::Graph& g) {
    fl::SubdivisionPlan plan;
    for (const fl::Edge& e : g.edges()) plan.entries.emplace(e, 3);
    fl::SurgeryResult r = fl::bisubdivide(g, plan);
    auto before = fl::perfect_matchings(g);
    std::set<oracle::Mask> images;
    for (const fl::Matching& m : before) {
      fl::Matching m2 = fl::matching_bijection(g, r, m);
      EXPECT_TRUE(fl::is_perfect_matching(r.graph, m2));
      images.insert(oracle::from_edge_mask(m2));
    }
    EXPECT_EQ(images.size(), before.size());
    EXPECT_EQ(fl::count_perfect_matchings(r.graph), before.size());
    return true;
  });
}

TEST(Bisubdivide, PreservesGlobalForcingNumber) {
  // checked against the trace definition on the stretched graph
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=6,min=4,filter=matchable"), [](const fl::Graph& g) {
    if (g.size() > 9) return true;
    const int gf = fl::global_forcing_number(g).value;
    for (const fl::Edge& e : g.edges()) {
      fl::Graph h = stretch(g, e).graph;
      EXPECT_EQ(oracle::global_forcing_number(h), gf) << fl::serialize_graph(g) << format_edge(e);
    }
    return true;
  });
}

TEST(Bisubdivide, AntiForcingPreservedAwayFromTheAttainingMatching) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=6,min=4,filter=matchable"), [](const fl::Graph& g) {
    if (g.size() > 9) return true;
    fl::MaxAntiForcing best = fl::max_anti_forcing_number(g);
    for (int e = 0; e < g.size(); ++e) {
      fl::Graph h = stretch(g, g.edge(e)).graph;
      const int af2 = oracle::max_anti_forcing_number(h);
      EXPECT_LE(af2, best.value);
      if (!best.matching.test(e)) EXPECT_EQ(af2, best.value) << fl::serialize_graph(g);
    }
    return true;
  });
}

TEST(QuadSubdivide, Shape) {
  fl::Graph c4 = fl::cycle_graph(4);
  fl::SurgeryResult r = fl::quad_gadget(c4, fl::Edge(0, 1));
  EXPECT_EQ(r.graph.order(), 8);
  EXPECT_EQ(r.graph.size(), 9);
  const std::vector<int>& p = r.replacement_paths.at(fl::Edge(0, 1));
  ASSERT_EQ(p.size(), 6U);
  EXPECT_EQ(p.front(), 0);
  EXPECT_EQ(p.back(), 1);
  EXPECT_TRUE(r.graph.adjacent(p[1], p[4]));

  fl::SubdivisionPlan plan;
  plan.entries.emplace(fl::Edge(0, 1), 2);
  fl::SurgeryResult r2 = fl::quad_subdivide(c4, plan);
  EXPECT_EQ(r2.graph.order(), 4 + 8);
  EXPECT_EQ(r2.graph.size(), 3 + 9 + 2);
  const std::vector<int>& q = r2.replacement_paths.at(fl::Edge(0, 1));
  EXPECT_TRUE(r2.graph.adjacent(q[1], q[4]));
  EXPECT_TRUE(r2.graph.adjacent(q[5], q[8]));

  plan.entries[fl::Edge(0, 1)] = 0;
  EXPECT_EQ(fl::quad_subdivide(c4, plan).graph, c4);
  plan.entries[fl::Edge(0, 1)] = -1;
  EXPECT_THROW(fl::quad_subdivide(c4, plan), fl::GraphError);
}

TEST(QuadGadget, RaisesBothNumbersByOne) {
  fl::Graph c4 = fl::cycle_graph(4);
  fl::Graph g = fl::quad_gadget(c4, fl::Edge(0, 1)).graph;
  EXPECT_EQ(fl::gf_and_Af(c4), std::make_pair(1, 1));
  EXPECT_EQ(fl::gf_and_Af(g), std::make_pair(2, 2));
  EXPECT_EQ(oracle::global_forcing_number(g), 2);
  EXPECT_EQ(oracle::max_anti_forcing_number(g), 2);
}

TEST(QuadSubdivide, StrongReplaceableSetOfH14) {
  fl::Catalog cat = fl::parse_catalog(fl::read_text_file(FORCING_LAB_CATALOG_FILE));
  const fl::CatalogEntry* h = fl::find_entry(cat, "H1,4");
  ASSERT_NE(h, nullptr);
  ASSERT_FALSE(h->strong_replaceable_sets.empty());
  EXPECT_EQ(h->strong_replaceable_sets[0], mask_of(h->graph, "1-2 3-4"));
  fl::SubdivisionPlan plan;
  h->strong_replaceable_sets[0].for_each([&](int e) { plan.entries.emplace(h->graph.edge(e), 1); });
  fl::Graph q = fl::quad_subdivide(h->graph, plan).graph;
  auto [gf, af] = fl::gf_and_Af(q);
  EXPECT_EQ(gf, af);
}

TEST(RecognizeBisubdivision, Examples) {
  auto m = fl::recognize_bisubdivision(fl::cycle_graph(6), fl::cycle_graph(4));
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(fl::validate_bisubdivision(fl::cycle_graph(6), fl::cycle_graph(4), *m));
  EXPECT_FALSE(fl::recognize_bisubdivision(fl::cycle_graph(6), fl::complete_graph(4)).has_value());
  EXPECT_FALSE(fl::recognize_bisubdivision(fl::cycle_graph(4), fl::cycle_graph(6)).has_value());
  // three odd path lengths never sum to six
  EXPECT_FALSE(fl::recognize_bisubdivision(fl::cycle_graph(6), fl::cycle_graph(3)).has_value());
  EXPECT_TRUE(fl::recognize_bisubdivision(fl::cycle_graph(5), fl::cycle_graph(3)).has_value());

  fl::Graph k4 = fl::complete_graph(4);
  fl::Graph h = stretch(k4, fl::Edge(0, 1), 5).graph;
  auto mk = fl::recognize_bisubdivision(h, k4);
  ASSERT_TRUE(mk.has_value());
  EXPECT_TRUE(fl::validate_bisubdivision(h, k4, *mk));

  fl::EdgeMask none;
  EXPECT_FALSE(fl::recognize_bisubdivision(h, k4, &none).has_value());
  fl::EdgeMask any_edge = k4.all_edges();
  EXPECT_TRUE(fl::recognize_bisubdivision(h, k4, &any_edge).has_value());
}

TEST(RecognizeBisubdivision, ThetaGraphs) {
  fl::Graph th = fl::theta_graph({3, 3, 3});
  fl::Graph th2 = fl::theta_graph({3, 5, 1});
  EXPECT_TRUE(fl::recognize_bisubdivision(th2, fl::theta_graph({3, 3, 1})).has_value());
  EXPECT_TRUE(fl::recognize_bisubdivision(th, fl::theta_graph({3, 3, 1})).has_value());
  EXPECT_TRUE(fl::recognize_bisubdivision(fl::theta_graph({2, 4, 2}), fl::theta_graph({2, 2, 2})).has_value());
  EXPECT_FALSE(fl::recognize_bisubdivision(fl::theta_graph({2, 3, 2}), fl::theta_graph({2, 2, 2})).has_value());
}

TEST(RecognizeBisubdivision, AgreesWithThreadCheck) {
  fl::Graph k4 = fl::complete_graph(4);
  fl::Graph k33 = fl::complete_bipartite(3, 3);
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=8,min=6,filter=connected"), [&](const fl::Graph& g) {
    if (g.size() > 11) return true;
    for (const fl::Graph* j : {&k4, &k33}) {
      auto m = fl::recognize_bisubdivision(g, *j);
      EXPECT_EQ(m.has_value(), oracle::is_bisubdivision(g, oracle::all_edges(g), *j)) << fl::serialize_graph(g);
      if (m) EXPECT_TRUE(fl::validate_bisubdivision(g, *j, *m));
    }
    return true;
  });
}

TEST(EarDecomposition, Counts) {
  fl::Graph c6 = fl::cycle_graph(6);
  fl::EarDecomposition d = fl::bipartite_ear_decomposition(c6);
  EXPECT_EQ(d.ears.size(), 1U);
  EXPECT_TRUE(fl::validate_ear_decomposition(c6, d));

  fl::Graph k33 = fl::complete_bipartite(3, 3);
  fl::EarDecomposition dk = fl::bipartite_ear_decomposition(k33);
  EXPECT_EQ(dk.ears.size(), 4U);
  EXPECT_TRUE(fl::validate_ear_decomposition(k33, dk));

  fl::Graph chord = c6.with_edge(fl::Edge(0, 3));
  EXPECT_EQ(fl::bipartite_ear_decomposition(chord).ears.size(), 2U);

  EXPECT_THROW(fl::bipartite_ear_decomposition(fl::complete_graph(4)), fl::PreconditionError);
  EXPECT_THROW(fl::bipartite_ear_decomposition(fl::path_graph(4)), fl::PreconditionError);
}

TEST(EarDecomposition, ValidatorRejectsTampering) {
  fl::Graph k33 = fl::complete_bipartite(3, 3);
  fl::EarDecomposition d = fl::bipartite_ear_decomposition(k33);
  fl::EarDecomposition dropped = d;
  dropped.ears.pop_back();
  EXPECT_FALSE(fl::validate_ear_decomposition(k33, dropped));
  fl::EarDecomposition reversed = d;
  std::swap(reversed.ears.front(), reversed.ears.back());
  EXPECT_FALSE(fl::validate_ear_decomposition(k33, reversed));
}

TEST(EarDecomposition, EveryMatchingCoveredBipartiteGraph) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=10,min=4,filter=bipartite+mc"), [](const fl::Graph& g) {
    fl::EarDecomposition d = fl::bipartite_ear_decomposition(g);
    EXPECT_TRUE(fl::validate_ear_decomposition(g, d)) << fl::serialize_graph(g);
    EXPECT_EQ(static_cast<int>(d.ears.size()), fl::cyclomatic_number(g));
    return true;
  });
}

}  // namespace
