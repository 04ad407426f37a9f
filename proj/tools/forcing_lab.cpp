// SPDX-License-Identifier: Apache-2.0
//
// forcing_lab: command-line front end for the library.
//
// Exit status: 0 success (or every check passed), 1 a checked property
// failed, 2 usage, file or parse error, 3 a cap was exceeded and the answer
// is unknown.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "forcing_lab/cycles.hpp"
#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/matching.hpp"
#include "forcing_lab/minors.hpp"
#include "forcing_lab/surgery.hpp"
#include "forcing_lab/verify.hpp"

namespace fl = forcing_lab;

namespace {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kUnknown = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string catalog_path;
  std::size_t max_matchings = fl::kDefaultMatchingCap;
  std::size_t max_cycles = fl::kDefaultCycleCap;
  std::uint64_t max_nodes = fl::kDefaultNodeBudget;
  std::optional<std::uint64_t> seed;
  bool tsv = false;
  bool witness = false;
  int jobs = 1;

  std::string matching;
  std::string only = "all";
  std::string bisubdivide;
  std::string quad;
  std::string property = "all";
  std::string pool;
  std::string artifacts;
  std::string replay;
  int bound = fl::kDefaultExhaustiveBound;

  fl::ForcingOptions caps() const {
    fl::ForcingOptions o;
    o.matching_cap = max_matchings;
    o.cycle_cap = max_cycles;
    return o;
  }
};

const char* kTsvHelp = R"(TSV columns (--tsv), tab separated, one record per result:
  analyze          file n m bipartite matchable mc bn pm gf Af c
  af               file af witness            (with --matching)
                   file Af matching witness   (without)
  minors           file name status
  classify         file family base
  uniform          file verdict gf Af counterexample
  eardecomp        file index ear             (index 0 is the base edge)
  verify-tables    name family expected_gf expected_af gf Af ok
  verify-theorems  property pool passed failed unknown skipped
Booleans print as true/false, undefined values as '-', edge lists as u-v,u-v.)";

fl::Graph load_graph(const std::string& path) { return fl::parse_graph(fl::read_text_file(path)); }

fl::Catalog load_catalog_file(const RunConfig& cfg, bool firewall) {
  if (cfg.catalog_path.empty()) throw UsageError("no catalog: pass --catalog or set FORCING_LAB_CATALOG");
  std::string text = fl::read_text_file(cfg.catalog_path);
  return firewall ? fl::load_catalog(text) : fl::parse_catalog(text);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string edge_list(const fl::Graph& g, const fl::EdgeMask& m) {
  std::string s = fl::format_edges(g, m, ",");
  return s.empty() ? "-" : s;
}

std::string vertex_path(const std::vector<int>& path) {
  std::string s;
  for (int v : path) s += (s.empty() ? "" : "-") + std::to_string(v + 1);
  return s;
}

// --- commands ------------------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  fl::Graph g = load_graph(cfg.input);
  const bool matchable = fl::is_matchable(g);
  const bool connected = fl::is_connected(g);
  std::string c = connected ? std::to_string(fl::cyclomatic_number(g)) : "-";
  std::string gf = "-", af = "-", bn = "-";
  std::optional<fl::ForcingReport> rep;
  std::optional<fl::BnResult> bnr;
  if (matchable) {
    rep = fl::forcing_report(g, cfg.caps());
    gf = std::to_string(rep->gf);
    af = std::to_string(rep->Af);
    bnr = fl::is_bn_graph(g);
    bn = yes_no(bnr->bn);
  }
  const bool mc = fl::is_matching_covered(g);
  const auto pm = fl::count_perfect_matchings(g);
  if (cfg.tsv) {
    out << cfg.input << '\t' << g.order() << '\t' << g.size() << '\t' << yes_no(fl::is_bipartite(g)) << '\t'
        << yes_no(matchable) << '\t' << yes_no(mc) << '\t' << bn << '\t' << pm << '\t' << gf << '\t' << af << '\t'
        << c << '\n';
    return kOk;
  }
  out << "n=" << g.order() << " m=" << g.size() << " bipartite=" << yes_no(fl::is_bipartite(g))
      << " matchable=" << yes_no(matchable) << " mc=" << yes_no(mc) << " pm=" << pm << " gf=" << gf << " Af=" << af
      << " c=" << c << " bn=" << bn << '\n';
  if (cfg.witness && rep) {
    out << "gf_witness " << edge_list(g, rep->gf_witness) << '\n';
    out << "Af_matching " << edge_list(g, rep->Af_matching) << '\n';
    out << "Af_witness " << edge_list(g, rep->Af_witness) << '\n';
    if (bnr && bnr->witness)
      out << "odd_bicycle " << fl::format_cycle(bnr->witness->first) << ' '
          << fl::format_cycle(bnr->witness->second) << '\n';
  }
  return kOk;
}

int cmd_af(const RunConfig& cfg, std::ostream& out) {
  fl::Graph g = load_graph(cfg.input);
  if (!cfg.matching.empty()) {
    fl::Matching m = g.mask_of(fl::parse_edge_list(cfg.matching, g.order()));
    if (!fl::is_perfect_matching(g, m)) throw UsageError("--matching is not a perfect matching of " + cfg.input);
    fl::Witnessed w = fl::anti_forcing_number(g, m);
    if (cfg.tsv) {
      out << cfg.input << '\t' << w.value << '\t' << edge_list(g, w.witness) << '\n';
      return kOk;
    }
    out << "af=" << w.value << '\n';
    if (cfg.witness) out << "witness " << edge_list(g, w.witness) << '\n';
    return kOk;
  }
  if (!fl::is_matchable(g)) throw fl::PreconditionError(cfg.input + " has no perfect matching");
  fl::MaxAntiForcing a = fl::max_anti_forcing_number(g, cfg.max_matchings);
  if (cfg.tsv) {
    out << cfg.input << '\t' << a.value << '\t' << edge_list(g, a.matching) << '\t' << edge_list(g, a.witness) << '\n';
    return kOk;
  }
  out << "Af=" << a.value << '\n';
  if (cfg.witness) {
    out << "matching " << edge_list(g, a.matching) << '\n';
    out << "witness " << edge_list(g, a.witness) << '\n';
  }
  return kOk;
}

int cmd_minors(const RunConfig& cfg, std::ostream& out) {
  fl::Graph g = load_graph(cfg.input);
  fl::Catalog cat = load_catalog_file(cfg, false);
  std::vector<std::string> fams;
  if (cfg.only == "all") fams = {"A", "D"};
  else fams = {cfg.only};
  auto entries = fl::select_family(cat, fams);
  auto hits = fl::screen_catalog(g, entries, cfg.max_nodes, cfg.jobs);
  bool unknown = false;
  for (const fl::ScreenHit& h : hits) {
    unknown |= h.status == fl::MinorStatus::unknown;
    if (cfg.tsv) {
      out << cfg.input << '\t' << h.name << '\t' << fl::to_string(h.status) << '\n';
      continue;
    }
    out << fl::to_string(h.status) << ' ' << h.name << '\n';
    if (!cfg.witness || !h.embedding) continue;
    const fl::Graph& j = fl::find_entry(cat, h.name)->graph;
    for (int e = 0; e < j.size(); ++e)
      out << "  " << fl::format_edge(j.edge(e)) << " -> " << vertex_path(h.embedding->path_map[e]) << '\n';
  }
  if (hits.empty() && !cfg.tsv) out << "none\n";
  return unknown ? kUnknown : kOk;
}

void print_profile(const fl::ChordProfile& p, std::ostream& out) {
  std::vector<int> cyc = p.hamilton_cycle.vertices;
  cyc.push_back(cyc.front());
  out << "hamilton_cycle " << vertex_path(cyc) << '\n';
  for (const fl::Chord& ch : p.chords) out << "chord " << fl::format_edge(ch.edge) << ' ' << fl::to_string(ch.role) << '\n';
  for (const fl::ChordPair& pr : p.pairs)
    out << "pair " << fl::format_edge(p.chords[pr.first].edge) << ' ' << fl::format_edge(p.chords[pr.second].edge) << ' '
        << fl::to_string(pr.relation) << '\n';
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  fl::Graph g = load_graph(cfg.input);
  fl::FamilyLabel label;
  std::optional<fl::Catalog> cat;
  if (fl::is_bipartite(g)) {
    label = fl::classify_bipartite(g);
  } else {
    cat = load_catalog_file(cfg, false);
    label = fl::classify_bn(g, *cat);
  }
  const std::string base = label.base.empty() ? "-" : label.base;
  if (cfg.tsv) {
    out << cfg.input << '\t' << fl::to_string(label.family) << '\t' << base << '\n';
  } else {
    out << "family=" << fl::to_string(label.family) << " base=" << base << '\n';
    if (label.replaceable_set >= 0) out << "replaceable_set " << label.replaceable_set << '\n';
    if (label.strong_set >= 0) out << "strong_replaceable_set " << label.strong_set << '\n';
    for (const auto& t : label.gadgets) out << "gadget " << vertex_path(t) << '\n';
    if (label.profile) print_profile(*label.profile, out);
    if (label.map && cat) {
      const fl::Graph& j = fl::find_entry(*cat, label.base)->graph;
      auto host = [&](int v) { return label.reduced_to_host.empty() ? v : label.reduced_to_host[v]; };
      for (int e = 0; e < j.size(); ++e) {
        std::vector<int> path;
        for (int v : label.map->edge_paths[e]) path.push_back(host(v));
        out << "  " << fl::format_edge(j.edge(e)) << " -> " << vertex_path(path) << '\n';
      }
    }
    if (!label.note.empty()) out << "note " << label.note << '\n';
  }
  return label.family == fl::Family::unknown ? kUnknown : kOk;
}

int cmd_uniform(const RunConfig& cfg, std::ostream& out) {
  fl::Graph g = load_graph(cfg.input);
  fl::UniformityResult r = fl::is_strongly_uniform(g, cfg.caps());
  std::string cex = r.counterexample ? edge_list(g, *r.counterexample) : "-";
  if (cfg.tsv) {
    out << cfg.input << '\t' << fl::to_string(r.verdict) << '\t' << (r.counterexample ? std::to_string(r.gf) : "-")
        << '\t' << (r.counterexample ? std::to_string(r.Af) : "-") << '\t' << cex << '\n';
  } else {
    out << "strongly_uniform=" << fl::to_string(r.verdict) << '\n';
    if (r.counterexample) out << "counterexample " << cex << " gf=" << r.gf << " Af=" << r.Af << '\n';
    if (!r.note.empty()) out << "note " << r.note << '\n';
  }
  switch (r.verdict) {
    case fl::Verdict::yes: return kOk;
    case fl::Verdict::no: return kFailed;
    default: return kUnknown;
  }
}

int cmd_surgery(const RunConfig& cfg, std::ostream& out) {
  if (cfg.bisubdivide.empty() == cfg.quad.empty()) throw UsageError("pass exactly one of --bisubdivide and --quad");
  fl::Graph g = load_graph(cfg.input);
  fl::SurgeryResult r = cfg.quad.empty() ? fl::bisubdivide(g, fl::parse_plan(g, cfg.bisubdivide))
                                         : fl::quad_subdivide(g, fl::parse_plan(g, cfg.quad));
  out << fl::serialize_graph(r.graph);
  out << "# replacement\n";
  for (const auto& [e, path] : r.replacement_paths) out << "# " << fl::format_edge(e) << ' ' << vertex_path(path) << '\n';
  return kOk;
}

int cmd_eardecomp(const RunConfig& cfg, std::ostream& out) {
  fl::Graph g = load_graph(cfg.input);
  fl::EarDecomposition d = fl::bipartite_ear_decomposition(g);
  if (cfg.tsv) {
    out << cfg.input << "\t0\t" << fl::format_edge(d.base) << '\n';
    for (std::size_t i = 0; i < d.ears.size(); ++i) out << cfg.input << '\t' << i + 1 << '\t' << vertex_path(d.ears[i]) << '\n';
    return kOk;
  }
  out << "base " << fl::format_edge(d.base) << '\n';
  for (std::size_t i = 0; i < d.ears.size(); ++i) out << "ear " << i + 1 << ' ' << vertex_path(d.ears[i]) << '\n';
  out << "ears=" << d.ears.size() << '\n';
  return kOk;
}

int cmd_verify_tables(const RunConfig& cfg, std::ostream& out) {
  fl::Catalog cat = load_catalog_file(cfg, false);
  fl::TableReport rep = fl::verify_tables(cat, cfg.caps());
  for (const fl::TableRow& r : rep.rows) {
    if (cfg.tsv) {
      out << r.name << '\t' << r.family << '\t' << r.expected_gf << '\t' << r.expected_af << '\t' << r.gf << '\t' << r.Af
          << '\t' << yes_no(r.ok) << '\n';
      continue;
    }
    out << r.name << ' ' << r.family << " expected=" << r.expected_gf << '/' << r.expected_af << " computed=" << r.gf
        << '/' << r.Af << ' ' << (r.ok ? "ok" : "MISMATCH") << '\n';
  }
  if (!cfg.tsv) out << "entries=" << rep.rows.size() << " failed=" << rep.failed << '\n';
  return rep.failed == 0 ? kOk : kFailed;
}

int cmd_verify_theorems(const RunConfig& cfg, std::ostream& out) {
  std::optional<fl::Catalog> cat;
  if (!cfg.catalog_path.empty()) cat = load_catalog_file(cfg, true);
  fl::TheoremContext ctx;
  ctx.catalog = cat ? &*cat : nullptr;
  ctx.caps = cfg.caps();
  ctx.node_budget = cfg.max_nodes;
  ctx.exhaustive_bound = cfg.bound;
  ctx.artifact_dir = cfg.artifacts;
  ctx.jobs = cfg.jobs;

  std::vector<fl::VerificationReport> reports;
  if (!cfg.replay.empty()) {
    reports.push_back(fl::replay_artifact(cfg.replay, ctx));
  } else {
    if (cfg.pool.empty()) throw UsageError("verify-theorems needs --pool or --replay");
    std::string spec = cfg.pool;
    if (cfg.seed) {
      if (spec.find("seed=") != std::string::npos) throw UsageError("seed given both in --pool and --seed");
      spec += ",seed=" + std::to_string(*cfg.seed);
    }
    fl::PoolSpec pool = fl::parse_pool_spec(spec);
    std::vector<std::string> names;
    if (cfg.property == "all") names = fl::theorem_properties();
    else names = {cfg.property};
    for (const std::string& name : names) reports.push_back(fl::verify_theorem(name, pool, ctx));
  }
  bool failed = false, unknown = false;
  for (const fl::VerificationReport& r : reports) {
    failed |= r.failed > 0;
    unknown |= r.unknown > 0;
    if (cfg.tsv)
      out << r.property << '\t' << r.pool << '\t' << r.passed << '\t' << r.failed << '\t' << r.unknown << '\t' << r.skipped
          << '\n';
    else
      out << fl::format_report(r) << '\n';
  }
  return failed ? kFailed : unknown ? kUnknown : kOk;
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "analyze") return cmd_analyze(cfg, out);
  if (cfg.command == "af") return cmd_af(cfg, out);
  if (cfg.command == "minors") return cmd_minors(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out);
  if (cfg.command == "uniform") return cmd_uniform(cfg, out);
  if (cfg.command == "surgery") return cmd_surgery(cfg, out);
  if (cfg.command == "eardecomp") return cmd_eardecomp(cfg, out);
  if (cfg.command == "verify-tables") return cmd_verify_tables(cfg, out);
  if (cfg.command == "verify-theorems") return cmd_verify_theorems(cfg, out);
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Matching forcing invariants, graph surgery, conformal minors and theorem checks."};
  app.footer(kTsvHelp);
  app.require_subcommand(1);
  app.add_option("--catalog", cfg.catalog_path, "Catalog file")->envname("FORCING_LAB_CATALOG");
  app.add_option("--max-matchings", cfg.max_matchings, "Perfect matching cap")->check(CLI::PositiveNumber);
  app.add_option("--max-cycles", cfg.max_cycles, "Cycle enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", cfg.max_nodes, "Minor search node budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for random pools");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--tsv", cfg.tsv, "Tab separated output");
  app.add_flag("--witness", cfg.witness, "Print certificates");

  auto with_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", cfg.input, "Graph file (p n m / e u v)")->required()->check(CLI::ExistingFile);
    return sub;
  };
  with_file("analyze", "Order, size, cyclomatic number, matching structure, BN test, gf and Af");
  with_file("af", "Anti-forcing number of a matching, or the maximum over all matchings")
      ->add_option("--matching", cfg.matching, "Perfect matching as u-v,u-v");
  with_file("minors", "Excluded conformal minors found in the graph")
      ->add_option("--only", cfg.only, "Families to screen")
      ->check(CLI::IsMember({"A", "D", "all"}));
  with_file("classify", "Structural family (B0..B3 or G0..G3)");
  CLI::App* uniform = with_file("uniform", "Strong uniformity with a counterexample subgraph");
  uniform->add_option("--cap", cfg.max_matchings, "Perfect matching cap")->check(CLI::PositiveNumber);
  CLI::App* surgery = with_file("surgery", "Bisubdivision or quadrilateral subdivision");
  surgery->add_option("--bisubdivide", cfg.bisubdivide, "Plan u-v:len,...");
  surgery->add_option("--quad", cfg.quad, "Plan u-v:k,...");
  with_file("eardecomp", "Bipartite ear decomposition");
  app.add_subcommand("verify-tables", "Recompute gf and Af for every catalog entry")->fallthrough();
  CLI::App* theorems = app.add_subcommand("verify-theorems", "Check properties over a graph pool");
  theorems->fallthrough();
  theorems->add_option("--property", cfg.property, "Property name or all");
  theorems->add_option("--pool", cfg.pool, "exhaustive:n=8,filter=bipartite+mc or random:n=10,p=0.4,count=100,seed=7");
  theorems->add_option("--artifacts", cfg.artifacts, "Directory for failing members");
  theorems->add_option("--replay", cfg.replay, "Re-run a stored artifact")->check(CLI::ExistingFile);
  theorems->add_option("--bound", cfg.bound, "Largest order for exhaustive pools")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return run(cfg, std::cout);
  } catch (const fl::CapExceeded& e) {
    std::cerr << "forcing_lab: unknown: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "forcing_lab: " << e.what() << '\n';
    return kUsage;
  }
}
