// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments pick
// criteria by number; with none, all eight run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forcing_lab/minors.hpp"
#include "forcing_lab/verify.hpp"
#include "oracles.hpp"

namespace fl = forcing_lab;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

const fl::Catalog& catalog() {
  static const fl::Catalog cat = fl::load_catalog(fl::read_text_file(FORCING_LAB_CATALOG_FILE));
  return cat;
}

fl::TheoremContext context() {
  fl::TheoremContext ctx;
  ctx.catalog = &catalog();
  return ctx;
}

// Runs properties on a pool; fails on any violation or undecided member.
Verdict run_properties(const std::vector<std::string>& names, const fl::PoolSpec& pool, fl::TheoremContext& ctx) {
  Verdict v;
  for (const std::string& name : names) {
    fl::VerificationReport r = fl::verify_theorem(name, pool, ctx);
    v.pass &= r.ok() && r.passed > 0;
    v.detail += (v.detail.empty() ? "" : "; ") + fl::format_report(r);
  }
  return v;
}

Verdict run_properties(const std::vector<std::string>& names, const std::vector<fl::Graph>& members,
                       const std::string& label, fl::TheoremContext& ctx) {
  Verdict v;
  for (const std::string& name : names) {
    fl::VerificationReport r = fl::verify_theorem(name, members, label, ctx);
    v.pass &= r.ok() && r.passed > 0;
    v.detail += (v.detail.empty() ? "" : "; ") + fl::format_report(r);
  }
  return v;
}

// --- 1: published tables ------------------------------------------------------------

Verdict tables() {
  std::map<std::string, std::pair<int, int>> want{{"A1", {2, 1}}, {"A2", {3, 2}}, {"A3", {3, 2}}, {"A4", {4, 3}},
                                                  {"D1", {2, 1}}, {"D2", {2, 1}}, {"D25", {4, 3}}};
  for (int i = 3; i <= 24; ++i) want["D" + std::to_string(i)] = {3, 2};
  const std::vector<std::pair<int, std::vector<std::string>>> uniform{
      {2, {"H1", "H2", "H3", "H1,2", "H1,3", "H1,5"}},
      {3, {"H4", "H5", "H6", "H1,1", "H1,4", "H2,1", "H3,1", "H3,2", "H3,3", "H1,4,5", "H3,1,1", "H3,4", "H4,5"}},
      {4, {"H7", "H4,1", "H4,2", "H4,3", "H5,1", "H5,2", "H6,1"}}};
  for (const auto& [v, names] : uniform)
    for (const std::string& n : names) want[n] = {v, v};

  fl::TableReport rep = fl::verify_tables(catalog());
  Verdict out;
  std::size_t matched = 0;
  for (const fl::TableRow& row : rep.rows) {
    auto it = want.find(row.name);
    if (it == want.end()) continue;
    ++matched;
    if (row.gf != it->second.first || row.Af != it->second.second || !row.ok) {
      out.pass = false;
      out.detail += row.name + " computed " + std::to_string(row.gf) + "/" + std::to_string(row.Af) + " ";
    }
  }
  if (matched != want.size()) {
    out.pass = false;
    out.detail += "missing entries ";
  }
  out.detail += "rows=" + std::to_string(matched) + " table_failures=" + std::to_string(rep.failed);
  out.pass &= rep.failed == 0;
  return out;
}

// --- 2 to 6: theorem pools ------------------------------------------------------------

Verdict gf_at_least_af() {
  fl::TheoremContext ctx = context();
  Verdict a = run_properties({"gf_ge_af"}, fl::parse_pool_spec("exhaustive:n=8,filter=bipartite+mc"), ctx);
  Verdict b = run_properties(
      {"gf_ge_af"}, fl::parse_pool_spec("random:n=10,p=0.35,count=500,seed=20240531,nmin=4,filter=matchable+bn"), ctx);
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Verdict cyclomatic_bound() {
  fl::TheoremContext ctx = context();
  return run_properties({"gf_le_cyclomatic"}, fl::parse_pool_spec("exhaustive:n=8,filter=connected+matchable"), ctx);
}

Verdict surgery() {
  std::vector<fl::Graph> members;
  for (const fl::CatalogEntry& e : catalog()) members.push_back(e.graph);
  for (const fl::Graph& g : fl::build_pool("random:n=8,p=0.5,count=100,seed=17,nmin=4,filter=connected+matchable").members)
    members.push_back(g);
  fl::TheoremContext ctx = context();
  return run_properties({"bisub_gf", "bisub_af", "bisub_af_preserved", "gadget", "quad_equivalence"}, members,
                        "catalog+random:n=8,count=100,seed=17", ctx);
}

Verdict bipartite_equivalence() {
  fl::TheoremContext ctx = context();
  return run_properties({"bmt_equivalence"}, fl::parse_pool_spec("exhaustive:n=10,min=4,filter=bipartite+mc"), ctx);
}

Verdict excluded_minors() {
  fl::TheoremContext ctx = context();
  return run_properties({"excluded_minors"}, fl::parse_pool_spec("exhaustive:n=10,filter=matchable+bn"), ctx);
}

// --- 7: irreplaceable edges and non-strong quadrilateral subdivisions --------------------

bool on_cycle(const fl::Graph& g, int e) {
  const int d = g.edge(e).v - g.edge(e).u;
  return d == 1 || d == g.order() - 1;
}

Verdict spot_checks() {
  const fl::Catalog& cat = catalog();
  auto patterns = [&](std::initializer_list<const char*> names) {
    std::vector<const fl::CatalogEntry*> out;
    for (const char* n : names) out.push_back(fl::find_entry(cat, n));
    return out;
  };
  const auto bisub_targets = patterns({"A1", "D1", "D2", "D9"});
  const auto quad_targets = patterns({"A3", "D10"});
  auto found_any = [](const fl::Graph& g, const std::vector<const fl::CatalogEntry*>& pats) {
    for (const fl::ScreenHit& h : fl::screen_catalog(g, pats))
      if (h.status == fl::MinorStatus::found) return true;
    return false;
  };

  Verdict out;
  int bisub_checked = 0, quad_checked = 0;
  for (const char* name : {"H1,2", "H1,3", "H1,4", "H1,5", "H3,1", "H1,4,5", "H3,1,1", "H3,4", "H4,5"}) {
    const fl::CatalogEntry& e = *fl::find_entry(cat, name);
    fl::EdgeMask replaceable;
    for (const fl::EdgeMask& s : e.replaceable_sets) replaceable |= s;
    bool any = false;
    for (int i = 0; i < e.graph.size(); ++i) {
      if (!on_cycle(e.graph, i) || replaceable.test(i)) continue;
      any = true;
      fl::SubdivisionPlan plan;
      plan.entries.emplace(e.graph.edge(i), 3);
      ++bisub_checked;
      if (!found_any(fl::bisubdivide(e.graph, plan).graph, bisub_targets)) {
        out.pass = false;
        out.detail += std::string(name) + " bisubdivide " + fl::format_edge(e.graph.edge(i)) + " ";
      }
    }
    if (!any) {
      out.pass = false;
      out.detail += std::string(name) + " has no irreplaceable cycle edge ";
    }
  }
  std::vector<std::string> quad_names{"H3,4", "H4,5"};
  for (const fl::CatalogEntry& e : cat)
    if (e.family == "G1") quad_names.push_back(e.name);
  for (const std::string& name : quad_names) {
    const fl::CatalogEntry& e = *fl::find_entry(cat, name);
    fl::EdgeMask replaceable, strong;
    for (const fl::EdgeMask& s : e.replaceable_sets) replaceable |= s;
    for (const fl::EdgeMask& s : e.strong_replaceable_sets) strong |= s;
    bool any = false;
    for (int i = 0; i < e.graph.size(); ++i) {
      if (!on_cycle(e.graph, i) || !replaceable.test(i) || strong.test(i)) continue;
      any = true;
      fl::SubdivisionPlan plan;
      plan.entries.emplace(e.graph.edge(i), 1);
      ++quad_checked;
      if (!found_any(fl::quad_subdivide(e.graph, plan).graph, quad_targets)) {
        out.pass = false;
        out.detail += name + " quad " + fl::format_edge(e.graph.edge(i)) + " ";
      }
    }
    if (!any) {
      out.pass = false;
      out.detail += name + " has no non-strong replaceable edge ";
    }
  }
  out.detail += "bisubdivisions=" + std::to_string(bisub_checked) + " quadrilateral=" + std::to_string(quad_checked);
  return out;
}

// --- 8: searches against brute force ---------------------------------------------------

Verdict oracle_agreement() {
  std::vector<const fl::CatalogEntry*> small;
  for (const fl::CatalogEntry& e : catalog())
    if (e.graph.order() <= 8) small.push_back(&e);
  Verdict out;
  int pairs = 0;
  for (const fl::CatalogEntry* host : small)
    for (const fl::CatalogEntry* pattern : small) {
      fl::MinorSearch s = fl::find_conformal_minor(host->graph, pattern->graph);
      const bool want = oracle::has_conformal_minor(host->graph, pattern->graph);
      ++pairs;
      bool ok = s.status != fl::MinorStatus::unknown && (s.status == fl::MinorStatus::found) == want;
      if (ok && s.embedding) ok = fl::validate_embedding(host->graph, pattern->graph, *s.embedding);
      if (!ok) {
        out.pass = false;
        out.detail += host->name + "/" + pattern->name + " ";
      }
    }
  out.detail += "pairs=" + std::to_string(pairs);
  fl::TheoremContext ctx = context();
  Verdict cycles = run_properties({"conformal_cycles"}, fl::parse_pool_spec("exhaustive:n=8,filter=matchable"), ctx);
  return {out.pass && cycles.pass, out.detail + "; " + cycles.detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"table reproduction", tables},
      {"gf >= Af on bipartite and BN pools", gf_at_least_af},
      {"gf <= c with equality iff all cycles conformal", cyclomatic_bound},
      {"surgery lemmas", surgery},
      {"bipartite three-way equivalence", bipartite_equivalence},
      {"BN excluded minors", excluded_minors},
      {"irreplaceable and non-strong subdivisions", spot_checks},
      {"minor search and conformal cycles against brute force", oracle_agreement}};
  std::set<int> chosen;
  for (int i = 1; i < argc; ++i) chosen.insert(std::stoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!chosen.empty() && !chosen.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " (" << time
              << ") " << v.detail << std::endl;
    all &= v.pass;
  }
  return all ? 0 : 1;
}
