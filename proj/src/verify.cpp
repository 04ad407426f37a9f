// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "forcing_lab/cycles.hpp"
#include "forcing_lab/matching.hpp"
#include "forcing_lab/surgery.hpp"
#include "nauty_bridge.hpp"

namespace forcing_lab {

// --- pools ------------------------------------------------------------------------

namespace {

const std::set<std::string, std::less<>> kFilters{"bipartite", "nonbipartite", "connected",
                                                  "matchable", "mc", "bn"};

bool needs_matching(const std::vector<std::string>& filters) {
  for (const auto& f : filters)
    if (f == "matchable" || f == "mc" || f == "bn") return true;
  return false;
}

bool has_filter(const std::vector<std::string>& filters, std::string_view f) {
  return std::find(filters.begin(), filters.end(), f) != filters.end();
}

template <class T>
T parse_number(std::string_view key, std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(0, "pool spec: malformed value for `" + std::string(key) + "`");
  return value;
}

double parse_probability(std::string_view s) {
  // std::from_chars for double is not available on every toolchain in use.
  std::string buf(s);
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(buf, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != buf.size() || p < 0 || p > 1) throw ParseError(0, "pool spec: `p` must be in [0,1]");
  return p;
}

}  // namespace

PoolSpec parse_pool_spec(std::string_view text) {
  PoolSpec spec;
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "pool spec: expected `exhaustive:` or `random:`");
  std::string_view kind = text.substr(0, colon);
  if (kind == "exhaustive")
    spec.kind = PoolSpec::Kind::exhaustive;
  else if (kind == "random")
    spec.kind = PoolSpec::Kind::random;
  else
    throw ParseError(0, "pool spec: unknown kind `" + std::string(kind) + "`");
  bool got_n = false, got_count = false, got_seed = false;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(0, "pool spec: expected key=value, got `" + std::string(item) + "`");
    std::string_view key = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      spec.n_max = parse_number<int>(key, value);
      got_n = true;
    } else if (key == "min" || key == "nmin") {
      spec.n_min = parse_number<int>(key, value);
    } else if (key == "p" && spec.kind == PoolSpec::Kind::random) {
      spec.p = parse_probability(value);
    } else if (key == "count" && spec.kind == PoolSpec::Kind::random) {
      spec.count = parse_number<int>(key, value);
      got_count = true;
    } else if (key == "seed" && spec.kind == PoolSpec::Kind::random) {
      spec.seed = parse_number<std::uint64_t>(key, value);
      got_seed = true;
    } else if (key == "filter") {
      std::string_view fs = value;
      while (!fs.empty()) {
        auto plus = fs.find('+');
        std::string_view f = fs.substr(0, plus);
        fs = plus == std::string_view::npos ? std::string_view{} : fs.substr(plus + 1);
        if (!kFilters.count(f)) throw ParseError(0, "pool spec: unknown filter `" + std::string(f) + "`");
        spec.filters.emplace_back(f);
      }
    } else {
      throw ParseError(0, "pool spec: unknown key `" + std::string(key) + "`");
    }
  }
  if (!got_n || spec.n_max < 1) throw ParseError(0, "pool spec: `n` must be a positive order");
  if (spec.n_min < 1 || spec.n_min > spec.n_max) throw ParseError(0, "pool spec: `min` must be in 1..n");
  if (spec.kind == PoolSpec::Kind::random && (!got_count || !got_seed))
    throw ParseError(0, "pool spec: random pools need `count` and `seed`");
  std::ostringstream out;
  if (spec.kind == PoolSpec::Kind::exhaustive) {
    out << "exhaustive:n=" << spec.n_max;
    if (spec.n_min != 1) out << ",min=" << spec.n_min;
  } else {
    out << "random:n=" << spec.n_max << ",p=" << spec.p << ",count=" << spec.count << ",seed=" << spec.seed;
    if (spec.n_min != 1) out << ",nmin=" << spec.n_min;
  }
  for (std::size_t i = 0; i < spec.filters.size(); ++i) out << (i ? "+" : ",filter=") << spec.filters[i];
  spec.text = out.str();
  return spec;
}

bool passes_filters(const Graph& g, const std::vector<std::string>& filters) {
  for (const auto& f : filters) {
    if (f == "bipartite" && !is_bipartite(g)) return false;
    if (f == "nonbipartite" && is_bipartite(g)) return false;
    if (f == "connected" && !is_connected(g)) return false;
    if ((f == "matchable" || f == "bn") && !is_matchable(g)) return false;
    if (f == "mc" && !is_matching_covered(g)) return false;
  }
  // The BN test is the expensive one; run it after everything else.
  if (has_filter(filters, "bn") && !is_bn_graph(g).bn) return false;
  return true;
}

std::uint64_t for_each_pool_member(const PoolSpec& spec, const std::function<bool(const Graph&)>& visit,
                                   int bound) {
  const bool even_only = needs_matching(spec.filters);
  std::uint64_t visited = 0;
  if (spec.kind == PoolSpec::Kind::exhaustive) {
    if (spec.n_max > bound)
      throw PreconditionError("exhaustive pools are limited to n <= " + std::to_string(bound));
    bool stop = false;
    for (int n = spec.n_min; n <= spec.n_max && !stop; ++n) {
      if (even_only && n % 2 == 1) continue;
      detail::GengFlags flags;
      flags.connected = has_filter(spec.filters, "connected") || has_filter(spec.filters, "mc");
      flags.bipartite = has_filter(spec.filters, "bipartite");
      flags.min_degree = even_only ? 1 : 0;
      detail::for_each_geng_graph(n, flags, [&](const Graph& g) {
        if (!passes_filters(g, spec.filters)) return true;
        ++visited;
        stop = !visit(g);
        return !stop;
      });
    }
    return visited;
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<int> orders;
  for (int n = spec.n_min; n <= spec.n_max; ++n)
    if (!even_only || n % 2 == 0) orders.push_back(n);
  if (orders.empty()) throw PreconditionError("pool spec admits no vertex count");
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  std::bernoulli_distribution coin(spec.p);
  const std::uint64_t max_attempts = static_cast<std::uint64_t>(spec.count) * 100'000 + 1000;
  for (std::uint64_t attempt = 0; visited < static_cast<std::uint64_t>(spec.count); ++attempt) {
    if (attempt >= max_attempts)
      throw CapExceeded("random pool: too few graphs pass the filters after " + std::to_string(max_attempts) +
                        " attempts");
    int n = orders[pick(rng)];
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (!passes_filters(g, spec.filters)) continue;
    ++visited;
    if (!visit(g)) break;
  }
  return visited;
}

GraphPool build_pool(const PoolSpec& spec, int bound) {
  GraphPool pool{spec, {}};
  for_each_pool_member(
      spec,
      [&](const Graph& g) {
        pool.members.push_back(g);
        return true;
      },
      bound);
  return pool;
}

GraphPool build_pool(std::string_view spec, int bound) { return build_pool(parse_pool_spec(spec), bound); }

// --- strong uniformity ------------------------------------------------------------

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Elementary components of a matchable graph as host edge sets, skipping
// the lone-edge ones.
std::vector<std::pair<VertexMask, EdgeMask>> nontrivial_components(const Graph& g) {
  ElementaryDecomposition ed = elementary_components(g);
  std::vector<std::pair<VertexMask, EdgeMask>> out;
  for (std::size_t i = 0; i < ed.vertices.size(); ++i)
    if (ed.edges[i].count() > 1) out.emplace_back(ed.vertices[i], ed.edges[i]);
  return out;
}

}  // namespace

std::vector<EdgeMask> matching_covered_conformal_subgraphs(const Graph& g, std::size_t cap) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  std::vector<EdgeMask> out;
  std::unordered_set<EdgeMask, EdgeMaskHash> seen_out;
  std::unordered_set<EdgeMask, EdgeMaskHash> seen_spanning;
  auto emit = [&](const EdgeMask& m) {
    if (!seen_out.insert(m).second) return;
    if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " subgraphs");
    out.push_back(m);
  };
  // Walk spanning subgraphs g' (edge sets of g) that are matchable; every
  // elementary component of such a g' is a wanted subgraph, and every wanted
  // subgraph is an elementary component of one of them.
  std::vector<EdgeMask> stack{g.all_edges()};
  seen_spanning.insert(g.all_edges());
  while (!stack.empty()) {
    EdgeMask cur = stack.back();
    stack.pop_back();
    Graph h = g.spanning_subgraph(cur);
    ElementaryDecomposition ed = elementary_components(h);
    EdgeMask allowed;
    for (std::size_t i = 0; i < ed.vertices.size(); ++i) {
      allowed = allowed | ed.edges[i];
      // Map component edges of h back to g.
      EdgeMask host;
      ed.edges[i].for_each([&](int e) { host.set(g.edge_index(h.edge(e))); });
      emit(host);
    }
    // Forbidden edges never matter; only drop allowed ones.
    allowed.for_each([&](int e) {
      EdgeMask next;
      EdgeMask hm = allowed;
      hm.reset(e);
      hm.for_each([&](int x) { next.set(g.edge_index(h.edge(x))); });
      if (seen_spanning.count(next)) return;
      if (!is_matchable(g.spanning_subgraph(next))) return;
      seen_spanning.insert(next);
      stack.push_back(next);
    });
  }
  return out;
}

struct UniformityOracle::Impl {
  ForcingOptions caps;
  std::unordered_map<std::string, bool> cache;

  bool mc_uniform(const Graph& k) {
    if (k.order() <= 2 || k.size() == k.order()) return true;
    std::string key = canonical_key(k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    bool ok = true;
    for (int e = 0; ok && e < k.size(); ++e) {
      EdgeMask rest = k.all_edges();
      rest.reset(e);
      Graph h = k.spanning_subgraph(rest);
      if (is_matchable(h) && !uniform(h)) ok = false;
    }
    if (ok) {
      auto [gf, af] = gf_and_Af(k, caps);
      ok = gf == af;
    }
    cache.emplace(std::move(key), ok);
    return ok;
  }

  bool uniform(const Graph& g) {
    for (const auto& [vs, es] : nontrivial_components(g))
      if (!mc_uniform(extract(g, es, vs).graph)) return false;
    return true;
  }

  // A failing matching covered subgraph, as host edges; g must be non-uniform.
  EdgeMask witness(const Graph& g) {
    for (const auto& [vs, es] : nontrivial_components(g)) {
      Extracted ex = extract(g, es, vs);
      if (mc_uniform(ex.graph)) continue;
      EdgeMask local = witness_mc(ex.graph);
      EdgeMask host;
      local.for_each([&](int e) { host.set(ex.edge_host[e]); });
      return host;
    }
    throw std::logic_error("no failing component");
  }

  EdgeMask witness_mc(const Graph& k) {
    for (int e = 0; e < k.size(); ++e) {
      EdgeMask rest = k.all_edges();
      rest.reset(e);
      Graph h = k.spanning_subgraph(rest);
      if (!is_matchable(h) || uniform(h)) continue;
      EdgeMask sub = witness(h);
      EdgeMask out;
      sub.for_each([&](int x) { out.set(k.edge_index(h.edge(x))); });
      return out;
    }
    return k.all_edges();
  }
};

UniformityOracle::UniformityOracle(ForcingOptions caps) : impl_(std::make_unique<Impl>()) { impl_->caps = caps; }
UniformityOracle::~UniformityOracle() = default;

std::size_t UniformityOracle::cache_size() const { return impl_->cache.size(); }

UniformityResult UniformityOracle::check(const Graph& g) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  UniformityResult r;
  try {
    if (impl_->uniform(g)) return r;
    r.verdict = Verdict::no;
    r.counterexample = impl_->witness(g);
    Graph h = extract(g, *r.counterexample).graph;
    std::tie(r.gf, r.Af) = gf_and_Af(h, impl_->caps);
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::unknown;
    r.counterexample.reset();
    r.note = e.what();
  }
  return r;
}

UniformityResult is_strongly_uniform(const Graph& g, const ForcingOptions& caps) {
  UniformityOracle oracle(caps);
  return oracle.check(g);
}

Verdict strongly_uniform_by_subsets(const Graph& g, int max_edges) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  if (g.size() > max_edges) return Verdict::unknown;
  std::unordered_map<std::string, bool> seen;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    EdgeMask s;
    for (int i = 0; i < g.size(); ++i)
      if (bits >> i & 1U) s.set(i);
    VertexMask vs = g.endpoints(s);
    if (std::popcount(vs) % 2 == 1 || !is_conformal(g, vs)) continue;
    Graph h = extract(g, s, vs).graph;
    if (!is_matchable(h)) continue;
    std::string key = canonical_key(h);
    auto it = seen.find(key);
    if (it == seen.end()) {
      auto [gf, af] = gf_and_Af(h);
      it = seen.emplace(std::move(key), gf == af).first;
    }
    if (!it->second) return Verdict::no;
  }
  return Verdict::yes;
}

// --- reports ----------------------------------------------------------------------

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << r.property << ' ' << r.pool << " passed=" << r.passed << " failed=" << r.failed
      << " unknown=" << r.unknown << " skipped=" << r.skipped << (r.ok() ? " PASS" : " FAIL");
  if (r.counterexample)
    out << " counterexample={n=" << r.counterexample->order() << ' ' << format_edges(r.counterexample->edges(), ",")
        << "}";
  if (!r.detail.empty()) out << ' ' << r.detail;
  return out.str();
}

TableReport verify_tables(const Catalog& catalog, const ForcingOptions& caps) {
  TableReport rep;
  for (const CatalogEntry& e : catalog) {
    TableRow row{e.name, e.family, e.expected_gf, e.expected_af, 0, 0, false};
    std::tie(row.gf, row.Af) = gf_and_Af(e.graph, caps);
    bool relation = e.family == "A" || e.family == "D" ? row.gf == row.Af + 1 : row.gf == row.Af;
    row.ok = relation && row.gf == e.expected_gf && row.Af == e.expected_af;
    if (!row.ok) ++rep.failed;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// --- properties -------------------------------------------------------------------

struct TheoremState {
  std::unique_ptr<UniformityOracle> oracle;
  std::unique_ptr<MinorLattice> lattice_a;
  std::unique_ptr<MinorLattice> lattice_ad;
};

namespace {

TheoremState& state_of(TheoremContext& ctx) {
  if (!ctx.state) ctx.state = std::make_shared<TheoremState>();
  TheoremState& st = *ctx.state;
  if (!st.oracle) st.oracle = std::make_unique<UniformityOracle>(ctx.caps);
  return st;
}

MinorLattice& lattice(TheoremContext& ctx, bool with_d) {
  if (ctx.catalog == nullptr) throw PreconditionError("this property needs a catalog");
  TheoremState& st = state_of(ctx);
  auto& slot = with_d ? st.lattice_ad : st.lattice_a;
  if (!slot) {
    std::vector<std::string> fams{"A"};
    if (with_d) fams.emplace_back("D");
    slot = std::make_unique<MinorLattice>(select_family(*ctx.catalog, fams));
  }
  return *slot;
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.order());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::string values(std::string_view a, int x, std::string_view b, int y) {
  return std::string(a) + "=" + std::to_string(x) + " " + std::string(b) + "=" + std::to_string(y);
}

PropertyOutcome outcome(bool holds, std::string detail = {}) {
  return {holds ? Verdict::yes : Verdict::no, false, std::move(detail)};
}

PropertyOutcome skip(std::string why) { return {Verdict::yes, true, std::move(why)}; }

// Single-edge bisubdivision to length 3.
Graph stretch_edge(const Graph& g, int e) {
  SubdivisionPlan plan;
  plan.entries.emplace(g.edge(e), 3);
  return bisubdivide(g, plan).graph;
}

PropertyOutcome gf_ge_af(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g)) return skip("not matchable");
  if (!is_bipartite(g) && !is_bn_graph(g).bn) return skip("neither bipartite nor BN");
  auto [gf, af] = gf_and_Af(g, ctx.caps);
  return outcome(gf >= af, values("gf", gf, "Af", af));
}

PropertyOutcome af_eq_cprime(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g) || !is_bipartite(g) || !is_planar(g)) return skip("not a matchable plane bipartite graph");
  ForcingOptions opt = ctx.caps;
  opt.with_c_prime = true;
  ForcingReport r = forcing_report(g, opt);
  for (const MatchingEntry& m : r.per_matching)
    if (m.af != *m.c_prime)
      return outcome(false, "matching {" + format_edges(g, m.matching, ",") + "} " + values("af", m.af, "c'", *m.c_prime));
  return outcome(true);
}

PropertyOutcome gf_le_cyclomatic(const Graph& g, TheoremContext& ctx) {
  if (!is_connected(g) || !is_matchable(g)) return skip("not connected and matchable");
  int gf = global_forcing_number(g).value;
  int c = cyclomatic_number(g);
  bool all_conformal = true;
  for_each_cycle(g, [&](const Cycle& cyc) {
    if (cyc.is_odd() || !is_conformal(g, cyc.vertex_set)) all_conformal = false;
    return all_conformal;
  });
  (void)ctx;
  return outcome(gf <= c && ((gf == c) == all_conformal),
                 values("gf", gf, "c", c) + " all_conformal=" + (all_conformal ? "true" : "false"));
}

PropertyOutcome bisub_gf(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g)) return skip("not matchable");
  int gf = gf_and_Af(g, ctx.caps).first;
  for (int e = 0; e < g.size(); ++e) {
    int gf2 = global_forcing_number(stretch_edge(g, e)).value;
    if (gf2 != gf) return outcome(false, "edge " + format_edge(g.edge(e)) + " " + values("gf", gf, "gf'", gf2));
  }
  return outcome(true);
}

PropertyOutcome bisub_af(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g)) return skip("not matchable");
  int af = max_anti_forcing_number(g, ctx.caps.matching_cap).value;
  for (int e = 0; e < g.size(); ++e) {
    int af2 = max_anti_forcing_number(stretch_edge(g, e), ctx.caps.matching_cap).value;
    if (af2 > af) return outcome(false, "edge " + format_edge(g.edge(e)) + " " + values("Af", af, "Af'", af2));
  }
  return outcome(true);
}

PropertyOutcome bisub_af_preserved(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g)) return skip("not matchable");
  MaxAntiForcing best = max_anti_forcing_number(g, ctx.caps.matching_cap);
  for (int e = 0; e < g.size(); ++e) {
    if (best.matching.test(e)) continue;
    int af2 = max_anti_forcing_number(stretch_edge(g, e), ctx.caps.matching_cap).value;
    if (af2 != best.value)
      return outcome(false, "edge " + format_edge(g.edge(e)) + " " + values("Af", best.value, "Af'", af2));
  }
  return outcome(true);
}

PropertyOutcome gadget(const Graph& g, TheoremContext& ctx) {
  if (!is_connected(g) || !is_matchable(g) || g.size() == 0) return skip("not connected and matchable");
  ForcingReport r = forcing_report(g, ctx.caps);
  for (int e = 0; e < g.size(); ++e) {
    if (r.Af_matching.test(e)) continue;
    SurgeryResult sr = quad_gadget(g, g.edge(e));
    const Graph& ge = sr.graph;
    auto [gf2, af2] = gf_and_Af(ge, ctx.caps);
    const std::vector<int>& p = sr.replacement_paths.at(g.edge(e));
    Matching me;
    r.Af_matching.for_each([&](int i) { me.set(ge.edge_index(g.edge(i))); });
    me.set(ge.edge_index(p[1], p[4]));
    me.set(ge.edge_index(p[2], p[3]));
    int af_me = anti_forcing_number(ge, me).value;
    std::string d = "edge " + format_edge(g.edge(e)) + " " + values("gf", r.gf, "gf_e", gf2) + " " +
                    values("Af", r.Af, "Af_e", af2) + " af(M_e)=" + std::to_string(af_me);
    if (gf2 != r.gf + 1 || af2 != r.Af + 1 || af_me != af2) return outcome(false, d);
  }
  return outcome(true);
}

PropertyOutcome quad_equivalence(const Graph& g, TheoremContext& ctx) {
  if (!is_connected(g) || !is_matchable(g)) return skip("not connected and matchable");
  ForcingReport r = forcing_report(g, ctx.caps);
  SubdivisionPlan plan;
  for (int e = 0; e < g.size() && plan.entries.size() < 2; ++e)
    if (!r.Af_matching.test(e)) plan.entries.emplace(g.edge(e), 1);
  if (plan.entries.empty()) return skip("every edge lies in the attaining matching");
  SurgeryResult q = quad_subdivide(g, plan);
  // Compose with a bisubdivision of one replacement-path edge.
  const std::vector<int>& p = q.replacement_paths.begin()->second;
  SubdivisionPlan more;
  more.entries.emplace(Edge(p[2], p[3]), 3);
  Graph g0 = bisubdivide(q.graph, more).graph;
  auto [gf0, af0] = gf_and_Af(g0, ctx.caps);
  return outcome((gf0 == af0) == (r.gf == r.Af), values("gf", r.gf, "Af", r.Af) + " " + values("gf0", gf0, "Af0", af0));
}

PropertyOutcome bmt_equivalence(const Graph& g, TheoremContext& ctx) {
  if (g.order() < 4 || !is_bipartite(g) || !is_matching_covered(g))
    return skip("not a matching covered bipartite graph on 4 or more vertices");
  UniformityResult su = state_of(ctx).oracle->check(g);
  bool minor = lattice(ctx, false).contains_any(g);
  FamilyLabel label = classify_bipartite(g);
  std::string d = "uniform=" + std::string(to_string(su.verdict)) + " a_minor=" + (minor ? "true" : "false") +
                  " family=" + std::string(to_string(label.family));
  if (su.verdict == Verdict::unknown || label.family == Family::unknown) return {Verdict::unknown, false, d};
  bool a = su.verdict == Verdict::yes;
  bool b = !minor;
  bool c = label.family != Family::none;
  return outcome(a == b && b == c, d);
}

PropertyOutcome excluded_minors(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g) || !is_bn_graph(g).bn) return skip("not a matchable BN graph");
  UniformityResult su = state_of(ctx).oracle->check(g);
  bool minor = lattice(ctx, true).contains_any(g);
  std::string d = "uniform=" + std::string(to_string(su.verdict)) + " ad_minor=" + (minor ? "true" : "false");
  if (su.verdict == Verdict::unknown) return {Verdict::unknown, false, d};
  return outcome((su.verdict == Verdict::yes) == !minor, d);
}

PropertyOutcome su_reduction(const Graph& g, TheoremContext& ctx) {
  constexpr int kMaxEdges = 16;
  if (!is_matchable(g) || g.order() > 8 || g.size() > kMaxEdges) return skip("outside the brute-force range");
  UniformityResult fast = state_of(ctx).oracle->check(g);
  Verdict slow = strongly_uniform_by_subsets(g, kMaxEdges);
  return outcome(fast.verdict == slow,
                 "oracle=" + std::string(to_string(fast.verdict)) + " subsets=" + std::string(to_string(slow)));
}

PropertyOutcome conformal_cycle_agreement(const Graph& g, TheoremContext& ctx) {
  if (!is_matchable(g)) return skip("not matchable");
  auto a = conformal_cycles(g, ctx.caps.cycle_cap);
  auto b = conformal_cycles_via_matchings(g, ctx.caps.cycle_cap);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return outcome(a == b, "remainder=" + std::to_string(a.size()) + " alternating=" + std::to_string(b.size()));
}

PropertyOutcome ear_count(const Graph& g, TheoremContext&) {
  if (!is_bipartite(g) || !is_matching_covered(g) || g.order() < 2) return skip("not matching covered bipartite");
  EarDecomposition d = bipartite_ear_decomposition(g);
  bool valid = validate_ear_decomposition(g, d);
  int c = cyclomatic_number(g);
  return outcome(valid && static_cast<int>(d.ears.size()) == c,
                 "ears=" + std::to_string(d.ears.size()) + " c=" + std::to_string(c));
}

using PropertyFn = PropertyOutcome (*)(const Graph&, TheoremContext&);

const std::vector<std::pair<std::string, PropertyFn>>& property_table() {
  static const std::vector<std::pair<std::string, PropertyFn>> table{
      {"gf_ge_af", gf_ge_af},
      {"af_eq_cprime", af_eq_cprime},
      {"gf_le_cyclomatic", gf_le_cyclomatic},
      {"bisub_gf", bisub_gf},
      {"bisub_af", bisub_af},
      {"bisub_af_preserved", bisub_af_preserved},
      {"gadget", gadget},
      {"quad_equivalence", quad_equivalence},
      {"bmt_equivalence", bmt_equivalence},
      {"excluded_minors", excluded_minors},
      {"su_reduction", su_reduction},
      {"conformal_cycles", conformal_cycle_agreement},
      {"ear_decomposition", ear_count},
  };
  return table;
}

PropertyFn find_property(std::string_view name) {
  if (name == "gf_ge_af_bipartite") name = "gf_ge_af";
  for (const auto& [n, fn] : property_table())
    if (n == name) return fn;
  throw PreconditionError("unknown property `" + std::string(name) + "`");
}

PropertyOutcome evaluate(PropertyFn fn, const Graph& g, TheoremContext& ctx) {
  try {
    return fn(g, ctx);
  } catch (const CapExceeded& e) {
    return {Verdict::unknown, false, e.what()};
  }
}

void record(VerificationReport& rep, const Graph& g, const PropertyOutcome& o, const TheoremContext& ctx) {
  if (o.skipped) {
    ++rep.skipped;
    return;
  }
  if (o.verdict == Verdict::yes) {
    ++rep.passed;
    return;
  }
  ++(o.verdict == Verdict::no ? rep.failed : rep.unknown);
  if (!rep.counterexample) {
    rep.counterexample = g;
    rep.detail = o.detail;
  }
  constexpr std::uint64_t kMaxArtifacts = 100;
  const std::uint64_t index = rep.failed + rep.unknown;
  if (ctx.artifact_dir.empty() || index > kMaxArtifacts) return;
  std::filesystem::create_directories(ctx.artifact_dir);
  std::ofstream out(std::filesystem::path(ctx.artifact_dir) / (rep.property + "_" + std::to_string(index) + ".g"));
  out << "# property " << rep.property << '\n'
      << "# pool " << rep.pool << '\n'
      << "# verdict " << to_string(o.verdict) << ' ' << o.detail << '\n'
      << serialize_graph(g);
}

}  // namespace

const std::vector<std::string>& theorem_properties() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : property_table()) out.push_back(n);
    return out;
  }();
  return names;
}

PropertyOutcome check_property(std::string_view name, const Graph& g, TheoremContext& ctx) {
  return evaluate(find_property(name), g, ctx);
}

namespace {

// Evaluates members with ctx.jobs workers and records outcomes in member order.
class BatchRunner {
 public:
  BatchRunner(PropertyFn fn, VerificationReport& rep, TheoremContext& ctx) : fn_(fn), rep_(rep), ctx_(ctx) {
    const int jobs = std::max(1, ctx.jobs);
    for (int w = 1; w < jobs; ++w) {
      TheoremContext c = ctx;
      c.state = nullptr;
      workers_.push_back(std::move(c));
    }
  }

  void add(const Graph& g) {
    batch_.push_back(g);
    if (batch_.size() >= kBatch * (workers_.size() + 1)) flush();
  }

  void flush() {
    std::vector<PropertyOutcome> out(batch_.size());
    if (workers_.empty()) {
      for (std::size_t i = 0; i < batch_.size(); ++i) out[i] = evaluate(fn_, batch_[i], ctx_);
    } else {
      std::atomic<std::size_t> next{0};
      auto work = [&](TheoremContext& c) {
        for (std::size_t i; (i = next.fetch_add(1)) < batch_.size();) out[i] = evaluate(fn_, batch_[i], c);
      };
      std::vector<std::thread> threads;
      for (TheoremContext& c : workers_) threads.emplace_back(work, std::ref(c));
      work(ctx_);
      for (std::thread& t : threads) t.join();
    }
    for (std::size_t i = 0; i < batch_.size(); ++i) record(rep_, batch_[i], out[i], ctx_);
    batch_.clear();
  }

 private:
  static constexpr std::size_t kBatch = 512;
  PropertyFn fn_;
  VerificationReport& rep_;
  TheoremContext& ctx_;
  std::vector<TheoremContext> workers_;
  std::vector<Graph> batch_;
};

}  // namespace

VerificationReport verify_theorem(std::string_view name, const PoolSpec& pool, TheoremContext& ctx) {
  PropertyFn fn = find_property(name);
  VerificationReport rep;
  rep.property = std::string(name);
  rep.pool = pool.text;
  BatchRunner runner(fn, rep, ctx);
  for_each_pool_member(
      pool,
      [&](const Graph& g) {
        runner.add(g);
        return true;
      },
      ctx.exhaustive_bound);
  runner.flush();
  return rep;
}

VerificationReport verify_theorem(std::string_view name, const std::vector<Graph>& members,
                                  std::string_view pool_label, TheoremContext& ctx) {
  PropertyFn fn = find_property(name);
  VerificationReport rep;
  rep.property = std::string(name);
  rep.pool = std::string(pool_label);
  BatchRunner runner(fn, rep, ctx);
  for (const Graph& g : members) runner.add(g);
  runner.flush();
  return rep;
}

VerificationReport replay_artifact(const std::string& path, TheoremContext& ctx) {
  std::string text = read_text_file(path);
  std::string property;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("# property ", 0) == 0) {
      property = line.substr(11);
      while (!property.empty() && (property.back() == '\r' || property.back() == ' ')) property.pop_back();
      break;
    }
  }
  if (property.empty()) throw ParseError(0, path + ": missing `# property <name>` line");
  Graph g = parse_graph(text);
  return verify_theorem(property, std::vector<Graph>{g}, "replay:" + path, ctx);
}

}  // namespace forcing_lab
