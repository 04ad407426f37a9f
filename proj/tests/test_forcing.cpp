// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "forcing_lab/forcing.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

fl::EdgeMask mask_of(const fl::Graph& g, std::string_view edges) {
  return g.mask_of(fl::parse_edge_list(edges, g.order()));
}

// hubs 1, 2; paths 1-3-4-2, 1-5-6-2, 1-7-8-2
fl::Graph theta333() { return fl::theta_graph({3, 3, 3}); }

// visits matchable graphs on n vertices with at most `max_edges` edges
void for_each_small_matchable(int n, int max_edges, const std::function<void(const fl::Graph&)>& f) {
  fl::for_each_pool_member(
      fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n) + ",filter=matchable"),
      [&](const fl::Graph& g) {
        if (g.size() <= max_edges) f(g);
        return true;
      });
}

TEST(MinHittingSet, Examples) {
  fl::Graph k4 = fl::complete_graph(4);
  fl::HittingInstance inst{k4.all_edges(), {}};
  for (const fl::Cycle& c : fl::conformal_cycles(k4)) inst.targets.push_back(c.edges);
  fl::EdgeMask s = fl::min_hitting_set(inst);
  EXPECT_EQ(s.count(), 2);
  for (const fl::EdgeMask& t : inst.targets) EXPECT_TRUE(s.intersects(t));

  fl::HittingInstance empty{k4.all_edges(), {}};
  EXPECT_TRUE(fl::min_hitting_set(empty).none());

  fl::HittingInstance bad{mask_of(k4, "1-2"), {mask_of(k4, "3-4")}};
  EXPECT_THROW(fl::min_hitting_set(bad), fl::PreconditionError);
}

TEST(MinHittingSet, LexicographicallyLeast) {
  fl::Graph c6 = fl::cycle_graph(6);
  fl::HittingInstance inst{c6.all_edges(), {c6.all_edges()}};
  fl::EdgeMask s = fl::min_hitting_set(inst);
  EXPECT_EQ(s.count(), 1);
  EXPECT_TRUE(s.test(0));
}

TEST(MinHittingSet, AgreesWithSubsetSearch) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=7,min=5"), [](const fl::Graph& g) {
    if (g.size() > 14) return true;
    fl::HittingInstance inst{g.all_edges(), {}};
    std::vector<oracle::Mask> targets;
    for (const fl::Cycle& c : fl::enumerate_cycles(g)) {
      inst.targets.push_back(c.edges);
      targets.push_back(oracle::from_edge_mask(c.edges));
    }
    EXPECT_EQ(fl::min_hitting_set(inst).count(), oracle::min_hitting_set_size(oracle::all_edges(g), targets));
    return true;
  });
}

TEST(GlobalForcing, SetExamples) {
  fl::Graph k4 = fl::complete_graph(4);
  // 1-2 and 3-4 lie on the same two conformal 4-cycles; 1-3-2-4 is missed
  EXPECT_FALSE(fl::is_global_forcing_set(k4, mask_of(k4, "1-2 3-4")));
  EXPECT_TRUE(fl::is_global_forcing_set(k4, mask_of(k4, "1-2 1-3")));
  EXPECT_THROW(fl::is_global_forcing_set(fl::cycle_graph(5), fl::EdgeMask{}), fl::PreconditionError);
}

TEST(GlobalForcing, NumberExamples) {
  EXPECT_EQ(fl::global_forcing_number(fl::cycle_graph(6)).value, 1);
  EXPECT_EQ(fl::global_forcing_number(fl::complete_graph(4)).value, 2);
  EXPECT_EQ(fl::global_forcing_number(fl::complete_bipartite(3, 3)).value, 4);
  EXPECT_EQ(fl::global_forcing_number(fl::complete_graph(2)).value, 0);
  fl::Witnessed w = fl::global_forcing_number(theta333());
  EXPECT_EQ(w.value, 2);
  EXPECT_TRUE(fl::is_global_forcing_set(theta333(), w.witness));
}

TEST(GlobalForcing, AgreesWithTraceDefinition) {
  for (int n = 2; n <= 6; n += 2)
    for_each_small_matchable(n, 15, [](const fl::Graph& g) {
      fl::Witnessed w = fl::global_forcing_number(g);
      EXPECT_EQ(w.value, w.witness.count());
      EXPECT_TRUE(fl::is_global_forcing_set(g, w.witness));
      EXPECT_EQ(w.value, oracle::global_forcing_number(g)) << fl::serialize_graph(g);
    });
  for_each_small_matchable(8, 11, [](const fl::Graph& g) {
    EXPECT_EQ(fl::global_forcing_number(g).value, oracle::global_forcing_number(g)) << fl::serialize_graph(g);
  });
}

TEST(AntiForcing, K4) {
  fl::Graph k4 = fl::complete_graph(4);
  fl::Matching m = mask_of(k4, "1-2 3-4");
  fl::Witnessed w = fl::anti_forcing_number(k4, m);
  EXPECT_EQ(w.value, 2);
  EXPECT_EQ(w.witness, mask_of(k4, "1-3 1-4"));
  EXPECT_TRUE(fl::is_anti_forcing_set(k4, m, mask_of(k4, "2-3 2-4")));
  EXPECT_FALSE(fl::is_anti_forcing_set(k4, m, mask_of(k4, "1-3 2-4")));
  EXPECT_THROW(fl::is_anti_forcing_set(k4, m, mask_of(k4, "1-2")), fl::PreconditionError);
  EXPECT_THROW(fl::anti_forcing_number(k4, mask_of(k4, "1-2")), fl::PreconditionError);
}

TEST(AntiForcing, ThetaWithMatchedHubPath) {
  fl::Graph th = theta333();
  fl::Matching m = mask_of(th, "1-3 2-4 5-6 7-8");
  fl::Witnessed w = fl::anti_forcing_number(th, m);
  EXPECT_EQ(w.value, 1);
  EXPECT_EQ(w.witness, mask_of(th, "3-4"));
}

TEST(AntiForcing, MaximumExamples) {
  EXPECT_EQ(fl::max_anti_forcing_number(fl::cycle_graph(6)).value, 1);
  EXPECT_EQ(fl::max_anti_forcing_number(fl::complete_graph(4)).value, 2);
  fl::MaxAntiForcing k33 = fl::max_anti_forcing_number(fl::complete_bipartite(3, 3));
  EXPECT_EQ(k33.value, 3);
  EXPECT_TRUE(fl::is_anti_forcing_set(fl::complete_bipartite(3, 3), k33.matching, k33.witness));
  EXPECT_THROW(fl::max_anti_forcing_number(fl::complete_graph(8), 5), fl::CapExceeded);
}

TEST(AntiForcing, AgreesWithUniqueMatchingDefinition) {
  for (int n = 2; n <= 6; n += 2)
    for_each_small_matchable(n, 15, [](const fl::Graph& g) {
      for (const fl::Matching& m : fl::perfect_matchings(g)) {
        fl::Witnessed w = fl::anti_forcing_number(g, m);
        EXPECT_TRUE(fl::is_anti_forcing_set(g, m, w.witness));
        EXPECT_FALSE(w.witness.intersects(m));
        EXPECT_EQ(w.value, oracle::anti_forcing_number(g, oracle::from_edge_mask(m))) << fl::serialize_graph(g);
      }
    });
  for_each_small_matchable(8, 11, [](const fl::Graph& g) {
    EXPECT_EQ(fl::max_anti_forcing_number(g).value, oracle::max_anti_forcing_number(g)) << fl::serialize_graph(g);
  });
}

TEST(CompatibleAlternating, Examples) {
  fl::Graph c6 = fl::cycle_graph(6);
  EXPECT_EQ(fl::compatible_alternating_number(c6, fl::perfect_matchings(c6)[0]).value, 1);
  fl::Graph k4 = fl::complete_graph(4);
  fl::CompatibleSet k = fl::compatible_alternating_number(k4, mask_of(k4, "1-2 3-4"));
  EXPECT_EQ(k.value, 2);
  EXPECT_EQ(k.cycles.size(), 2U);
  fl::Graph th = theta333();
  EXPECT_EQ(fl::compatible_alternating_number(th, mask_of(th, "1-3 2-4 5-6 7-8")).value, 1);
}

TEST(CompatibleAlternating, BoundedByAntiForcing) {
  for_each_small_matchable(6, 15, [](const fl::Graph& g) {
    for (const fl::Matching& m : fl::perfect_matchings(g)) {
      fl::CompatibleSet c = fl::compatible_alternating_number(g, m);
      EXPECT_LE(c.value, fl::anti_forcing_number(g, m).value);
      for (std::size_t i = 0; i < c.cycles.size(); ++i) {
        EXPECT_TRUE(fl::is_alternating(c.cycles[i], m));
        for (std::size_t j = i + 1; j < c.cycles.size(); ++j)
          EXPECT_TRUE(((c.cycles[i].edges & c.cycles[j].edges) - m).none());
      }
    }
  });
}

TEST(ForcingReport, Consistent) {
  fl::Graph g = fl::complete_bipartite(3, 3);
  fl::ForcingReport r = fl::forcing_report(g, {.with_c_prime = true});
  EXPECT_EQ(r.gf, 4);
  EXPECT_EQ(r.Af, 3);
  ASSERT_EQ(r.per_matching.size(), 6U);
  for (const fl::MatchingEntry& e : r.per_matching) {
    EXPECT_EQ(e.af, fl::anti_forcing_number(g, e.matching).value);
    ASSERT_TRUE(e.c_prime.has_value());
    EXPECT_LE(*e.c_prime, e.af);
  }
  EXPECT_EQ(fl::gf_and_Af(g), std::make_pair(4, 3));
  EXPECT_THROW(fl::forcing_report(fl::cycle_graph(5)), fl::PreconditionError);
}

TEST(ForcingReport, GlobalBoundsMaximumAntiForcingOnBipartiteAndBn) {
  for (int n = 2; n <= 8; n += 2)
    for_each_small_matchable(n, 16, [](const fl::Graph& g) {
      if (!fl::is_bipartite(g) && !fl::is_bn_graph(g).bn) return;
      auto [gf, af] = fl::gf_and_Af(g);
      EXPECT_GE(gf, af) << fl::serialize_graph(g);
    });
}

}  // namespace
