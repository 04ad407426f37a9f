// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

const fl::Catalog& catalog() {
  static const fl::Catalog cat = fl::parse_catalog(fl::read_text_file(FORCING_LAB_CATALOG_FILE));
  return cat;
}

fl::TheoremContext context() {
  fl::TheoremContext ctx;
  ctx.catalog = &catalog();
  return ctx;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("forcing_lab_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(PoolSpec, Exhaustive) {
  fl::PoolSpec s = fl::parse_pool_spec("exhaustive:n=8,min=4,filter=bipartite+mc");
  EXPECT_EQ(s.kind, fl::PoolSpec::Kind::exhaustive);
  EXPECT_EQ(s.n_max, 8);
  EXPECT_EQ(s.n_min, 4);
  EXPECT_EQ(s.filters, (std::vector<std::string>{"bipartite", "mc"}));
  EXPECT_EQ(s.text, "exhaustive:n=8,min=4,filter=bipartite+mc");
}

TEST(PoolSpec, Random) {
  fl::PoolSpec s = fl::parse_pool_spec("random:n=10,p=0.4,count=20,seed=7,filter=matchable");
  EXPECT_EQ(s.kind, fl::PoolSpec::Kind::random);
  EXPECT_EQ(s.count, 20);
  EXPECT_EQ(s.seed, 7U);
  EXPECT_DOUBLE_EQ(s.p, 0.4);
}

TEST(PoolSpec, RejectsMalformed) {
  for (const char* bad : {"", "exhaustive", "exhaustive:n=x", "exhaustive:n=5,filter=planar", "random:n=5,p=0.5",
                          "random:n=5,p=2,count=3,seed=1", "sample:n=5", "exhaustive:n=5,seed=3"})
    EXPECT_THROW(fl::parse_pool_spec(bad), fl::ParseError) << bad;
}

TEST(Pool, ExhaustiveBound) {
  EXPECT_THROW(fl::build_pool("exhaustive:n=11"), fl::PreconditionError);
  EXPECT_EQ(fl::build_pool("exhaustive:n=4,min=4").members.size(), 11U);
  EXPECT_EQ(fl::build_pool("exhaustive:n=4,min=4,filter=connected").members.size(), 6U);
}

TEST(Pool, RandomIsDeterministic) {
  auto a = fl::build_pool("random:n=10,p=0.4,count=25,seed=11,filter=matchable");
  auto b = fl::build_pool("random:n=10,p=0.4,count=25,seed=11,filter=matchable");
  auto c = fl::build_pool("random:n=10,p=0.4,count=25,seed=12,filter=matchable");
  ASSERT_EQ(a.members.size(), 25U);
  EXPECT_EQ(a.members, b.members);
  EXPECT_NE(a.members, c.members);
  for (const fl::Graph& g : a.members) {
    EXPECT_TRUE(fl::is_matchable(g));
    EXPECT_LE(g.order(), 10);
  }
}

TEST(Pool, FiltersHold) {
  for (const fl::Graph& g : fl::build_pool("exhaustive:n=8,min=6,filter=nonbipartite+mc+bn").members) {
    EXPECT_FALSE(fl::is_bipartite(g));
    EXPECT_TRUE(oracle::matching_covered(g));
    EXPECT_FALSE(oracle::has_odd_conformal_bicycle(g));
  }
}

// connected matching covered edge subsets with a matchable remainder
std::set<oracle::Mask> mc_conformal_by_subsets(const fl::Graph& g) {
  std::set<oracle::Mask> out;
  for (oracle::Mask s = 1; s <= oracle::all_edges(g); ++s) {
    if (!oracle::matchable(g, oracle::all_vertices(g) & ~oracle::endpoints(g, s))) continue;
    if (oracle::matching_covered(oracle::subgraph(g, s))) out.insert(s);
  }
  return out;
}

TEST(MatchingCoveredConformalSubgraphs, Examples) {
  EXPECT_EQ(fl::matching_covered_conformal_subgraphs(fl::cycle_graph(6)).size(), 7U);
  EXPECT_EQ(fl::matching_covered_conformal_subgraphs(fl::complete_graph(2)).size(), 1U);
  EXPECT_EQ(fl::matching_covered_conformal_subgraphs(fl::complete_graph(4)).size(), 10U);
  EXPECT_THROW(fl::matching_covered_conformal_subgraphs(fl::complete_graph(6), 3), fl::CapExceeded);
}

TEST(MatchingCoveredConformalSubgraphs, AgreesWithSubsetSearch) {
  fl::for_each_pool_member(fl::parse_pool_spec("exhaustive:n=6,min=2,filter=matchable"), [](const fl::Graph& g) {
    std::set<oracle::Mask> got;
    for (const fl::EdgeMask& h : fl::matching_covered_conformal_subgraphs(g))
      EXPECT_TRUE(got.insert(oracle::from_edge_mask(h)).second) << "duplicate";
    EXPECT_EQ(got, mc_conformal_by_subsets(g)) << fl::serialize_graph(g);
    return true;
  });
}

TEST(StrongUniformity, Examples) {
  EXPECT_EQ(fl::is_strongly_uniform(fl::cycle_graph(6)).verdict, fl::Verdict::yes);
  EXPECT_EQ(fl::is_strongly_uniform(fl::complete_graph(4)).verdict, fl::Verdict::yes);
  fl::UniformityResult k33 = fl::is_strongly_uniform(fl::complete_bipartite(3, 3));
  EXPECT_EQ(k33.verdict, fl::Verdict::no);
  ASSERT_TRUE(k33.counterexample.has_value());
  EXPECT_GT(k33.gf, k33.Af);
  fl::Graph h = fl::extract(fl::complete_bipartite(3, 3), *k33.counterexample).graph;
  EXPECT_EQ(fl::gf_and_Af(h), std::make_pair(k33.gf, k33.Af));
  EXPECT_THROW(fl::is_strongly_uniform(fl::cycle_graph(5)), fl::PreconditionError);
}

TEST(StrongUniformity, AgreesWithSubsetDefinition) {
  fl::UniformityOracle su;
  for (int n = 2; n <= 6; n += 2)
    fl::for_each_pool_member(
        fl::parse_pool_spec("exhaustive:n=" + std::to_string(n) + ",min=" + std::to_string(n) + ",filter=matchable"),
        [&](const fl::Graph& g) {
          if (g.size() > 12) return true;
          const bool want = oracle::strongly_uniform(g);
          EXPECT_EQ(su.check(g).verdict == fl::Verdict::yes, want) << fl::serialize_graph(g);
          EXPECT_EQ(fl::strongly_uniform_by_subsets(g) == fl::Verdict::yes, want);
          return true;
        });
  EXPECT_GT(su.cache_size(), 0U);
}

TEST(VerifyTables, ShippedCatalogPasses) {
  fl::TableReport r = fl::verify_tables(catalog());
  EXPECT_EQ(r.failed, 0U);
  EXPECT_EQ(r.rows.size(), catalog().size());
  for (const fl::TableRow& row : r.rows) EXPECT_TRUE(row.ok) << row.name;
}

TEST(VerifyTables, DetectsCorruptedEntry) {
  fl::Catalog c = catalog();
  for (fl::CatalogEntry& e : c)
    if (e.name == "A4") e.expected_af = 4;
  fl::TableReport r = fl::verify_tables(c);
  EXPECT_EQ(r.failed, 1U);
  for (const fl::TableRow& row : r.rows) EXPECT_EQ(row.ok, row.name != "A4");
}

TEST(VerifyTheorem, UnknownPropertyIsRejected) {
  fl::TheoremContext ctx = context();
  EXPECT_THROW(fl::verify_theorem("no_such_property", fl::parse_pool_spec("exhaustive:n=4"), ctx),
               fl::PreconditionError);
  EXPECT_FALSE(fl::theorem_properties().empty());
}

TEST(VerifyTheorem, SmallPoolsPass) {
  fl::TheoremContext ctx = context();
  for (const std::string& name : fl::theorem_properties()) {
    fl::VerificationReport r = fl::verify_theorem(name, fl::parse_pool_spec("exhaustive:n=6,min=4,filter=connected"), ctx);
    EXPECT_TRUE(r.ok()) << fl::format_report(r);
    EXPECT_EQ(r.passed + r.skipped, 6U + 21U + 112U) << name;
  }
}

TEST(VerifyTheorem, ReportLine) {
  fl::TheoremContext ctx = context();
  fl::VerificationReport r = fl::verify_theorem("gf_ge_af", fl::parse_pool_spec("exhaustive:n=4,min=4"), ctx);
  EXPECT_EQ(fl::format_report(r).rfind("gf_ge_af exhaustive:n=4,min=4 passed=", 0), 0U) << fl::format_report(r);
}

TEST(VerifyTheorem, CapsGiveUnknownAndArtifactsReplay) {
  auto dir = scratch_dir("artifacts");
  fl::TheoremContext ctx = context();
  ctx.caps.matching_cap = 2;
  ctx.artifact_dir = dir.string();
  fl::VerificationReport r = fl::verify_theorem("gf_ge_af", {fl::complete_bipartite(3, 3)}, "k33", ctx);
  EXPECT_EQ(r.unknown, 1U);
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.counterexample.has_value());
  auto file = dir / "gf_ge_af_1.g";
  ASSERT_TRUE(std::filesystem::exists(file));

  fl::TheoremContext fresh = context();
  fl::VerificationReport again = fl::replay_artifact(file.string(), fresh);
  EXPECT_EQ(again.passed, 1U);
  EXPECT_TRUE(again.ok());
  std::filesystem::remove_all(dir);
}

TEST(VerifyTheorem, JobsDoNotChangeReports) {
  fl::PoolSpec pool = fl::parse_pool_spec("exhaustive:n=8,min=6,filter=mc");
  fl::TheoremContext one = context();
  fl::TheoremContext four = context();
  four.jobs = 4;
  for (const char* name : {"gf_ge_af", "excluded_minors", "bmt_equivalence"}) {
    fl::VerificationReport a = fl::verify_theorem(name, pool, one);
    fl::VerificationReport b = fl::verify_theorem(name, pool, four);
    EXPECT_EQ(fl::format_report(a), fl::format_report(b));
  }
}

TEST(CheckProperty, Outcomes) {
  fl::TheoremContext ctx = context();
  EXPECT_TRUE(fl::check_property("gf_ge_af", fl::cycle_graph(5), ctx).skipped);
  fl::PropertyOutcome o = fl::check_property("excluded_minors", fl::complete_bipartite(3, 3), ctx);
  EXPECT_FALSE(o.skipped);
  EXPECT_EQ(o.verdict, fl::Verdict::yes);
  EXPECT_NE(o.detail.find("uniform=no"), std::string::npos) << o.detail;
}

}  // namespace
