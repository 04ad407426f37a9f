// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "forcing_lab/forcing.hpp"
#include "forcing_lab/matching.hpp"
#include "thread_embedding.hpp"

namespace forcing_lab {

// --- catalog ------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view s, int line, std::string_view what) {
  int value = 0;
  s = trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
    throw ParseError(line, "expected a nonnegative integer for `" + std::string(what) + "`");
  return value;
}

const std::set<std::string, std::less<>> kFamilies{"A", "D", "G0", "G1", "G2", "G3"};

// Entry under construction; the graph is built once its header block is complete.
struct Draft {
  CatalogEntry entry;
  std::optional<int> n;
  std::optional<std::vector<Edge>> edges;
  std::optional<int> gf;
  std::optional<int> af;
  std::vector<std::pair<int, std::string>> replaceable;  // (line, text)
  std::vector<std::pair<int, std::string>> strong;
};

CatalogEntry finish(Draft& d) {
  CatalogEntry& e = d.entry;
  const std::string who = "entry " + e.name;
  if (e.family.empty()) throw ParseError(e.line, who + ": missing `family`");
  if (!d.n) throw ParseError(e.line, who + ": missing `vertices`");
  if (!d.edges) throw ParseError(e.line, who + ": missing `edges`");
  if (!d.gf) throw ParseError(e.line, who + ": missing `gf`");
  if (!d.af) throw ParseError(e.line, who + ": missing `af`");
  try {
    e.graph = Graph(*d.n, *d.edges);
  } catch (const GraphError& err) {
    throw ParseError(e.line, who + ": " + err.what());
  }
  e.expected_gf = *d.gf;
  e.expected_af = *d.af;
  auto sets = [&](const std::vector<std::pair<int, std::string>>& src, std::vector<EdgeMask>& dst) {
    for (const auto& [line, text] : src) {
      std::vector<Edge> es;
      try {
        es = parse_edge_list(text, *d.n);
      } catch (const ParseError& err) {
        throw ParseError(line, err.what());
      }
      EdgeMask mask;
      for (const Edge& x : es) {
        int idx = e.graph.edge_index(x);
        if (idx < 0) throw ParseError(line, who + ": edge " + format_edge(x) + " is not in the graph");
        mask.set(idx);
      }
      dst.push_back(mask);
    }
  };
  sets(d.replaceable, e.replaceable_sets);
  sets(d.strong, e.strong_replaceable_sets);
  return e;
}

}  // namespace

Catalog parse_catalog(std::string_view text) {
  Catalog out;
  std::optional<Draft> draft;
  std::set<std::string, std::less<>> names;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.substr(0, 6) != "[graph")
        throw ParseError(line_no, "expected `[graph <name>]`");
      std::string name(trim(line.substr(6, line.size() - 7)));
      if (name.empty() || name.find_first_of(" \t") != std::string::npos)
        throw ParseError(line_no, "malformed entry name");
      if (!names.insert(name).second) throw ParseError(line_no, "duplicate entry " + name);
      if (draft) out.push_back(finish(*draft));
      draft.emplace();
      draft->entry.name = std::move(name);
      draft->entry.line = line_no;
      continue;
    }
    auto space = line.find_first_of(" \t");
    std::string_view key = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    if (!draft) throw ParseError(line_no, "`" + std::string(key) + "` outside an entry");
    Draft& d = *draft;
    auto once = [&](bool already) {
      if (already) throw ParseError(line_no, "repeated `" + std::string(key) + "`");
    };
    if (key == "family") {
      once(!d.entry.family.empty());
      if (!kFamilies.count(rest)) throw ParseError(line_no, "unknown family `" + std::string(rest) + "`");
      d.entry.family = std::string(rest);
    } else if (key == "vertices") {
      once(d.n.has_value());
      d.n = parse_count(rest, line_no, key);
      if (*d.n > kMaxVertices) throw ParseError(line_no, "too many vertices");
    } else if (key == "edges") {
      once(d.edges.has_value());
      if (!d.n) throw ParseError(line_no, "`edges` before `vertices`");
      try {
        d.edges = parse_edge_list(rest, *d.n);
      } catch (const ParseError& err) {
        throw ParseError(line_no, err.what());
      }
    } else if (key == "gf") {
      once(d.gf.has_value());
      d.gf = parse_count(rest, line_no, key);
    } else if (key == "af") {
      once(d.af.has_value());
      d.af = parse_count(rest, line_no, key);
    } else if (key == "replaceable_set") {
      d.replaceable.emplace_back(line_no, std::string(rest));
    } else if (key == "strong_replaceable_set") {
      d.strong.emplace_back(line_no, std::string(rest));
    } else if (key == "base") {
      once(d.entry.base.has_value());
      if (rest.empty()) throw ParseError(line_no, "`base` needs a name");
      d.entry.base = std::string(rest);
    } else {
      throw ParseError(line_no, "unknown directive `" + std::string(key) + "`");
    }
    if (end == text.size()) break;
  }
  if (draft) out.push_back(finish(*draft));
  for (const CatalogEntry& e : out)
    if (e.base && !names.count(*e.base))
      throw ParseError(e.line, "entry " + e.name + ": unknown base " + *e.base);
  return out;
}

Catalog load_catalog(std::string_view text) {
  Catalog catalog = parse_catalog(text);
  for (const CatalogEntry& e : catalog) {
    if (!is_matchable(e.graph))
      throw ParseError(e.line, "entry " + e.name + ": graph has no perfect matching");
    auto [gf, af] = gf_and_Af(e.graph);
    if (gf != e.expected_gf || af != e.expected_af)
      throw ParseError(e.line, "entry " + e.name + ": computed gf=" + std::to_string(gf) + " af=" +
                                   std::to_string(af) + ", declared gf=" + std::to_string(e.expected_gf) +
                                   " af=" + std::to_string(e.expected_af));
  }
  return catalog;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<const CatalogEntry*> select_family(const Catalog& catalog,
                                               const std::vector<std::string>& families) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog)
    if (std::find(families.begin(), families.end(), e.family) != families.end()) out.push_back(&e);
  return out;
}

const CatalogEntry* find_entry(const Catalog& catalog, std::string_view name) {
  for (const CatalogEntry& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

// --- Hamilton cycles and chords -------------------------------------------------

namespace {

// Hamilton cycles through vertex 0, each reported once (second vertex below last).
struct HamiltonWalker {
  const Graph& g;
  const std::function<bool(const Cycle&)>& visit;
  std::size_t cap;
  std::size_t count = 0;
  bool over_cap = false;
  std::vector<int> path;

  bool extend(int v, VertexMask used) {
    if (used == g.all_vertices()) {
      if (!g.adjacent(v, 0) || path[1] > path.back()) return true;
      if (++count > cap) {
        over_cap = true;
        return false;
      }
      return visit(make_cycle(g, path));
    }
    VertexMask rest = g.all_vertices() & ~used;
    // Every unvisited vertex needs two usable neighbours (one if it may close the path).
    for (VertexMask r = rest; r; r &= r - 1) {
      int w = std::countr_zero(r);
      int avail = std::popcount(g.neighbors(w) & (rest | vertex_bit(v) | vertex_bit(0)));
      if (avail < 2) return true;
    }
    for (VertexMask nb = g.neighbors(v) & rest; nb; nb &= nb - 1) {
      int w = std::countr_zero(nb);
      path.push_back(w);
      bool go = extend(w, used | vertex_bit(w));
      path.pop_back();
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_hamilton_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit,
                             std::size_t cap) {
  if (g.order() < 3) return true;
  HamiltonWalker w{g, visit, cap, 0, false, {0}};
  w.extend(0, vertex_bit(0));
  return !w.over_cap;
}

std::optional<Cycle> find_hamilton_cycle(const Graph& g) {
  std::optional<Cycle> found;
  for_each_hamilton_cycle(
      g,
      [&](const Cycle& c) {
        found = c;
        return false;
      },
      std::numeric_limits<std::size_t>::max());
  return found;
}

std::string_view to_string(ChordRole r) {
  switch (r) {
    case ChordRole::bicolorable: return "bicolorable";
    case ChordRole::black: return "black";
    case ChordRole::white: return "white";
  }
  return "?";
}

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::adjacent: return "adjacent";
    case PairRelation::parallel: return "parallel";
    case PairRelation::crossed: return "crossed";
    case PairRelation::strongly_crossed: return "strongly_crossed";
    case PairRelation::other: return "other";
  }
  return "?";
}

namespace {

PairRelation relate(const Edge& x, const Edge& y, const std::vector<int>& pos, int n) {
  if (x.touches(y.u) || x.touches(y.v)) return PairRelation::adjacent;
  int a = std::min(pos[x.u], pos[x.v]);
  int c = std::max(pos[x.u], pos[x.v]);
  int b = std::min(pos[y.u], pos[y.v]);
  int d = std::max(pos[y.u], pos[y.v]);
  if (a > b) {
    std::swap(a, b);
    std::swap(c, d);
  }
  auto same = [](int p, int q) { return (p - q) % 2 == 0; };
  auto near = [n](int p, int q) { return (p - q + n) % n == 1 || (q - p + n) % n == 1; };
  if (b < c && c < d) {
    // Interleaved a < b < c < d with chords a-c and b-d; the labelings
    // (x1, y1, x2, y2) read in either direction.
    const int lab[4][4] = {{a, b, c, d}, {c, d, a, b}, {a, d, c, b}, {c, b, a, d}};
    for (const auto& l : lab)
      if (same(l[0], l[1]) && near(l[0], l[3]) && near(l[2], l[1])) return PairRelation::strongly_crossed;
    return PairRelation::crossed;
  }
  // Consecutive (chords a-c and b-d with c < b) or nested (a < b < d < c).
  if (c < b) return same(a, b) || same(c, d) ? PairRelation::parallel : PairRelation::other;
  return same(a, d) || same(b, c) ? PairRelation::parallel : PairRelation::other;
}

}  // namespace

ChordProfile chord_profile(const Graph& g, const Cycle& c) {
  const int n = g.order();
  if (c.length() != n || c.vertex_set != g.all_vertices())
    throw PreconditionError("cycle is not a Hamilton cycle of the graph");
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % n]))
      throw PreconditionError("cycle is not a Hamilton cycle of the graph");
  ChordProfile p;
  p.hamilton_cycle = c;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[c.vertices[i]] = i;
  EdgeMask on_cycle;
  for (int i = 0; i < n; ++i) on_cycle.set(g.edge_index(c.vertices[i], c.vertices[(i + 1) % n]));
  for (int i = 0; i < g.size(); ++i) {
    if (on_cycle.test(i)) continue;
    const Edge& e = g.edge(i);
    Chord ch{e, ChordRole::bicolorable};
    if ((pos[e.u] - pos[e.v]) % 2 == 0) {
      ch.role = pos[e.u] % 2 == 0 ? ChordRole::black : ChordRole::white;
      ++(ch.role == ChordRole::black ? p.n_black : p.n_white);
    }
    p.chords.push_back(ch);
  }
  for (int i = 0; i < static_cast<int>(p.chords.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(p.chords.size()); ++j)
      p.pairs.push_back({i, j, relate(p.chords[i].edge, p.chords[j].edge, pos, n)});
  return p;
}

// --- classification -------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::B0: return "B0";
    case Family::B1: return "B1";
    case Family::B2: return "B2";
    case Family::B3: return "B3";
    case Family::G0: return "G0";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::none: return "none";
    case Family::unknown: return "unknown";
  }
  return "?";
}

FamilyLabel classify_bipartite(const Graph& g, std::size_t cap) {
  if (g.order() < 4) throw PreconditionError("classification needs at least 4 vertices");
  if (!is_bipartite(g)) throw PreconditionError("graph is not bipartite");
  if (!is_matching_covered(g)) throw PreconditionError("graph is not matching covered");
  FamilyLabel label;
  const int chords = g.size() - g.order();
  if (chords < 0) {
    label.note = "fewer edges than vertices";
    return label;
  }
  bool ok = for_each_hamilton_cycle(
      g,
      [&](const Cycle& c) {
        ChordProfile p = chord_profile(g, c);
        Family f = Family::none;
        if (chords == 0) {
          f = Family::B0;
        } else if (chords == 1) {
          f = Family::B1;
        } else {
          bool all_parallel = true;
          for (const ChordPair& pr : p.pairs) all_parallel &= pr.relation == PairRelation::parallel;
          if (chords == 2 && p.pairs[0].relation == PairRelation::strongly_crossed)
            f = Family::B2;
          else if (all_parallel)
            f = Family::B3;
        }
        if (f == Family::none) return true;
        // B2 outranks a B3 reading of another Hamilton cycle.
        if (label.family == Family::none || f < label.family) {
          label.family = f;
          label.profile = std::move(p);
        }
        return f == Family::B3 && chords == 2;
      },
      cap);
  if (!ok && label.family == Family::none) {
    label.family = Family::unknown;
    label.note = "more than " + std::to_string(cap) + " Hamilton cycles";
  } else if (label.family == Family::none) {
    label.note = label.profile ? "" : "no Hamilton cycle with the required chord pattern";
  }
  return label;
}

namespace {

struct Gadget {
  std::vector<int> thread;  // w1 .. w4 in the host
};

// Edges w1w4 closing an odd thread (length >= 3) of degree-2 vertices, both
// ends of degree 3.
std::vector<Gadget> gadget_candidates(const Graph& g) {
  std::vector<Gadget> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != 3 || g.degree(e.v) != 3) continue;
    for_each_vertex(g.neighbors(e.u), [&](int first) {
      if (first == e.v || g.degree(first) != 2) return;
      std::vector<int> t{e.u, first};
      int prev = e.u;
      int cur = first;
      while (g.degree(cur) == 2) {
        VertexMask nb = g.neighbors(cur) & ~vertex_bit(prev);
        int next = std::countr_zero(nb);
        prev = cur;
        cur = next;
        t.push_back(cur);
        if (static_cast<int>(t.size()) > g.order()) return;
      }
      int len = static_cast<int>(t.size()) - 1;
      if (cur == e.v && len >= 3 && len % 2 == 1) out.push_back({t});
    });
  }
  return out;
}

// Host with the interiors of the chosen threads removed, relabeled densely.
struct Reduced {
  Graph graph;
  std::vector<int> to_host;
  EdgeMask marked;  // w1w4 edges in the reduced graph
};

Reduced reduce(const Graph& g, const std::vector<Gadget>& gadgets) {
  VertexMask drop = 0;
  for (const Gadget& gd : gadgets)
    for (std::size_t i = 1; i + 1 < gd.thread.size(); ++i) drop |= vertex_bit(gd.thread[i]);
  Reduced r;
  Extracted ex = extract(g, g.induced_edges(g.all_vertices() & ~drop), g.all_vertices() & ~drop);
  r.graph = ex.graph;
  r.to_host = ex.to_host;
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(r.to_host.size()); ++i) local[r.to_host[i]] = i;
  for (const Gadget& gd : gadgets) r.marked.set(r.graph.edge_index(local[gd.thread.front()], local[gd.thread.back()]));
  return r;
}

// Hamilton cycle of the host induced by the base cycle 1..n of the entry, with
// gadget threads spliced in place of their w1w4 edges.
std::optional<Cycle> image_cycle(const Graph& host, const CatalogEntry& base, const BisubdivisionMap& map,
                                 const std::vector<int>& to_host, const std::vector<Gadget>& gadgets) {
  const int nb = base.graph.order();
  std::vector<int> seq;
  for (int i = 0; i < nb; ++i) {
    int a = i;
    int b = (i + 1) % nb;
    int idx = base.graph.edge_index(a, b);
    if (idx < 0) return std::nullopt;
    std::vector<int> p = map.edge_paths[idx];
    if (p.front() != map.vertex_map[a]) std::reverse(p.begin(), p.end());
    seq.insert(seq.end(), p.begin(), p.end() - 1);
  }
  for (int& v : seq) v = to_host[v];
  std::vector<int> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int u = seq[i];
    int v = seq[(i + 1) % seq.size()];
    out.push_back(u);
    for (const Gadget& gd : gadgets) {
      const auto& t = gd.thread;
      if (u == t.front() && v == t.back()) out.insert(out.end(), t.begin() + 1, t.end() - 1);
      if (u == t.back() && v == t.front()) out.insert(out.end(), t.rbegin() + 1, t.rend() - 1);
    }
  }
  if (static_cast<int>(out.size()) != host.order()) return std::nullopt;
  VertexMask seen = 0;
  for (int v : out) seen |= vertex_bit(v);
  if (seen != host.all_vertices()) return std::nullopt;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!host.adjacent(out[i], out[(i + 1) % out.size()])) return std::nullopt;
  return make_cycle(host, out);
}

bool try_entry(const Graph& host, const CatalogEntry& entry, Family family, FamilyLabel& label) {
  for (int s = 0; s < static_cast<int>(entry.replaceable_sets.size()); ++s) {
    auto map = recognize_bisubdivision(host, entry.graph, &entry.replaceable_sets[s]);
    if (!map) continue;
    label.family = family;
    label.base = entry.name;
    label.replaceable_set = s;
    label.reduced_to_host.resize(host.order());
    for (int v = 0; v < host.order(); ++v) label.reduced_to_host[v] = v;
    if (auto c = image_cycle(host, entry, *map, label.reduced_to_host, {})) label.profile = chord_profile(host, *c);
    label.map = std::move(map);
    return true;
  }
  return false;
}

constexpr std::size_t kMaxGadgetCandidates = 12;

bool try_gadgets(const Graph& host, const CatalogEntry& entry, FamilyLabel& label) {
  if (entry.strong_replaceable_sets.empty()) return false;
  std::vector<Gadget> cand = gadget_candidates(host);
  if (cand.empty() || cand.size() > kMaxGadgetCandidates) return false;
  const std::size_t total = std::size_t{1} << cand.size();
  for (std::size_t pick = 1; pick < total; ++pick) {
    std::vector<Gadget> chosen;
    VertexMask inner = 0;
    bool clash = false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (!(pick >> i & 1U)) continue;
      for (std::size_t k = 1; k + 1 < cand[i].thread.size(); ++k) {
        if (inner >> cand[i].thread[k] & 1U) clash = true;
        inner |= vertex_bit(cand[i].thread[k]);
      }
      chosen.push_back(cand[i]);
    }
    if (clash) continue;
    Reduced red = reduce(host, chosen);
    if (red.graph.size() - red.graph.order() != entry.graph.size() - entry.graph.order()) continue;
    detail::PatternShape shape = detail::analyze_pattern(entry.graph);
    for (int r = 0; r < static_cast<int>(entry.replaceable_sets.size()); ++r) {
      for (int s = 0; s < static_cast<int>(entry.strong_replaceable_sets.size()); ++s) {
        EdgeMask stretch = entry.replaceable_sets[r] | entry.strong_replaceable_sets[s];
        detail::ThreadSearchOptions opt;
        opt.spanning = true;
        opt.require_conformal = false;
        opt.node_budget = std::numeric_limits<std::uint64_t>::max();
        opt.rule.stretchable = &stretch;
        opt.rule.marked_ok = &entry.strong_replaceable_sets[s];
        opt.rule.marked = red.marked;
        detail::ThreadEmbedding emb;
        if (detail::search_threads(red.graph, shape, opt, emb) != detail::SearchStatus::found) continue;
        detail::EdgePaths ep = detail::expand_threads(red.graph, shape, emb, opt.rule);
        label.family = Family::G3;
        label.base = entry.name;
        label.replaceable_set = r;
        label.strong_set = s;
        for (const Gadget& gd : chosen) label.gadgets.push_back(gd.thread);
        label.reduced_to_host = red.to_host;
        label.map = BisubdivisionMap{std::move(ep.vertex_map), std::move(ep.edge_paths)};
        if (auto c = image_cycle(host, entry, *label.map, red.to_host, chosen)) label.profile = chord_profile(host, *c);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

FamilyLabel classify_bn(const Graph& g, const Catalog& catalog) {
  if (is_bipartite(g)) throw PreconditionError("graph is bipartite; use the bipartite classifier");
  if (!is_matching_covered(g)) throw PreconditionError("graph is not matching covered");
  if (!is_bn_graph(g).bn) throw PreconditionError("graph has an odd conformal bicycle");
  FamilyLabel label;
  const std::pair<const char*, Family> order[] = {
      {"G0", Family::G0}, {"G1", Family::G1}, {"G2", Family::G2}, {"G3", Family::G3}};
  for (const auto& [tag, family] : order)
    for (const CatalogEntry* e : select_family(catalog, {tag}))
      if (try_entry(g, *e, family, label)) return label;
  for (const CatalogEntry* e : select_family(catalog, {"G1"}))
    if (e->name != "H1,2" && try_gadgets(g, *e, label)) return label;
  label.note = "no fundamental graph matches after bisubdivision or gadget inversion";
  return label;
}

bool validate_bn_label(const Graph& g, const Catalog& catalog, const FamilyLabel& label) {
  const CatalogEntry* base = find_entry(catalog, label.base);
  if (base == nullptr || !label.map) return false;
  if (label.replaceable_set < 0 || label.replaceable_set >= static_cast<int>(base->replaceable_sets.size()))
    return false;
  const std::string want = label.family == Family::G3 && base->family == "G1" ? "G1" : std::string(to_string(label.family));
  if (base->family != want) return false;
  std::vector<Gadget> gadgets;
  for (const auto& t : label.gadgets) {
    const int len = static_cast<int>(t.size()) - 1;
    if (len < 3 || len % 2 == 0 || !g.adjacent(t.front(), t.back())) return false;
    if (g.degree(t.front()) != 3 || g.degree(t.back()) != 3) return false;
    for (int i = 0; i < len; ++i)
      if (!g.adjacent(t[i], t[i + 1])) return false;
    for (int i = 1; i < len; ++i)
      if (g.degree(t[i]) != 2) return false;
    gadgets.push_back({t});
  }
  Reduced red = reduce(g, gadgets);
  if (red.to_host != label.reduced_to_host) return false;
  EdgeMask stretch = base->replaceable_sets[label.replaceable_set];
  if (!gadgets.empty()) {
    if (label.strong_set < 0 || label.strong_set >= static_cast<int>(base->strong_replaceable_sets.size()))
      return false;
    stretch = stretch | base->strong_replaceable_sets[label.strong_set];
  }
  if (!validate_bisubdivision(red.graph, base->graph, *label.map, &stretch)) return false;
  // Every gadget edge must sit on the path of a strong replaceable edge.
  for (int e = 0; e < base->graph.size(); ++e) {
    const auto& p = label.map->edge_paths[e];
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      int idx = red.graph.edge_index(p[i], p[i + 1]);
      if (red.marked.test(idx) && !base->strong_replaceable_sets[label.strong_set].test(e)) return false;
    }
  }
  return true;
}

}  // namespace forcing_lab
