// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace forcing_lab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  check_order(n);
  if (static_cast<int>(edges_.size()) > kMaxEdges)
    throw GraphError("more than " + std::to_string(kMaxEdges) + " edges");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v >= n_) throw GraphError("edge " + format_edge(e) + " has endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw GraphError("duplicate edge " + format_edge(*dup));
  adj_.assign(n_, 0);
  index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int i = 0; i < size(); ++i) {
    const Edge& e = edges_[i];
    adj_[e.u] |= vertex_bit(e.v);
    adj_[e.v] |= vertex_bit(e.u);
    index_[e.u * n_ + e.v] = static_cast<std::int16_t>(i);
    index_[e.v * n_ + e.u] = static_cast<std::int16_t>(i);
  }
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (vertex_bit(n_) - 1);
}

EdgeMask Graph::incident(int v) const {
  EdgeMask m;
  for_each_vertex(adj_[v], [&](int w) { m.set(edge_index(v, w)); });
  return m;
}

VertexMask Graph::endpoints(const EdgeMask& mask) const {
  VertexMask out = 0;
  mask.for_each([&](int i) { out |= vertex_bit(edges_[i].u) | vertex_bit(edges_[i].v); });
  return out;
}

EdgeMask Graph::induced_edges(VertexMask vertices) const {
  EdgeMask m;
  for (int i = 0; i < size(); ++i)
    if ((vertices >> edges_[i].u & 1U) && (vertices >> edges_[i].v & 1U)) m.set(i);
  return m;
}

EdgeMask Graph::mask_of(const std::vector<Edge>& edges) const {
  EdgeMask m;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n_ || edge_index(e) < 0)
      throw GraphError("edge " + format_edge(e) + " is not in the graph");
    m.set(edge_index(e));
  }
  return m;
}

std::vector<Edge> Graph::edges_of(const EdgeMask& mask) const {
  std::vector<Edge> out;
  mask.for_each([&](int i) { out.push_back(edges_[i]); });
  return out;
}

Graph Graph::spanning_subgraph(const EdgeMask& mask) const { return Graph(n_, edges_of(mask)); }

Graph Graph::with_edge(const Edge& e) const {
  std::vector<Edge> es = edges_;
  es.push_back(e);
  return Graph(n_, std::move(es));
}

Extracted extract(const Graph& host, const EdgeMask& edges, VertexMask vertices) {
  vertices |= host.endpoints(edges);
  Extracted out;
  std::vector<int> local(host.order(), -1);
  for_each_vertex(vertices, [&](int v) {
    local[v] = static_cast<int>(out.to_host.size());
    out.to_host.push_back(v);
  });
  std::vector<Edge> es;
  edges.for_each([&](int i) {
    const Edge& e = host.edge(i);
    es.emplace_back(local[e.u], local[e.v]);
  });
  out.graph = Graph(static_cast<int>(out.to_host.size()), std::move(es));
  out.edge_host.resize(out.graph.size());
  for (int i = 0; i < out.graph.size(); ++i) {
    const Edge& e = out.graph.edge(i);
    out.edge_host[i] = host.edge_index(out.to_host[e.u], out.to_host[e.v]);
  }
  return out;
}

// --- text formats -----------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long> to_int(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> n;
  long m = 0;
  int header_line = 0;
  std::vector<Edge> edges;
  std::map<Edge, int> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "second header line (first at line " + std::to_string(header_line) + ")");
      if (tokens.size() != 3) throw ParseError(line_no, "expected `p <n> <m>`");
      auto nv = to_int(tokens[1]);
      auto mv = to_int(tokens[2]);
      if (!nv || !mv || *nv < 1 || *mv < 0) throw ParseError(line_no, "malformed header");
      if (*nv > kMaxVertices)
        throw ParseError(line_no, "at most " + std::to_string(kMaxVertices) + " vertices supported");
      n = static_cast<int>(*nv);
      m = *mv;
      header_line = line_no;
    } else if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected `e <u> <v>`");
      auto a = to_int(tokens[1]);
      auto b = to_int(tokens[2]);
      if (!a || !b) throw ParseError(line_no, "malformed edge");
      if (*a == *b) throw ParseError(line_no, "loop at vertex " + std::to_string(*a));
      if (*a < 1 || *b < 1 || *a > *n || *b > *n) throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(*n));
      if (*a > *b) throw ParseError(line_no, "edge endpoints must satisfy u < v");
      Edge e(static_cast<int>(*a) - 1, static_cast<int>(*b) - 1);
      if (auto it = seen.find(e); it != seen.end())
        throw ParseError(line_no, "duplicate edge " + format_edge(e) + " (first at line " + std::to_string(it->second) + ")");
      seen.emplace(e, line_no);
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unrecognized line `" + std::string(line) + "`");
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(0, "missing `p <n> <m>` header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(*n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::vector<Edge> parse_edge_list(std::string_view text, int n) {
  std::vector<Edge> out;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',' || c == ';') c = ' ';
  for (std::string_view tok : split_ws(buf)) {
    auto dash = tok.find('-');
    if (dash == std::string_view::npos) throw ParseError(0, "expected `u-v`, got `" + std::string(tok) + "`");
    auto a = to_int(tok.substr(0, dash));
    auto b = to_int(tok.substr(dash + 1));
    if (!a || !b) throw ParseError(0, "malformed edge `" + std::string(tok) + "`");
    if (*a == *b) throw ParseError(0, "loop `" + std::string(tok) + "`");
    if (*a < 1 || *b < 1 || *a > n || *b > n)
      throw ParseError(0, "edge `" + std::string(tok) + "` out of range 1.." + std::to_string(n));
    out.emplace_back(static_cast<int>(*a) - 1, static_cast<int>(*b) - 1);
  }
  return out;
}

Graph graph_from_string(int n, std::string_view edges) { return Graph(n, parse_edge_list(edges, n)); }

std::string format_edge(const Edge& e) { return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1); }

std::string format_edges(const std::vector<Edge>& edges, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += sep;
    out += format_edge(edges[i]);
  }
  return out;
}

std::string format_edges(const Graph& g, const EdgeMask& mask, std::string_view sep) {
  return format_edges(g.edges_of(mask), sep);
}

// --- elementary structure ---------------------------------------------------

std::optional<Coloring> bipartition(const Graph& g) {
  const int n = g.order();
  Coloring color(n, Color::black);
  std::vector<bool> seen(n, false);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    color[s] = Color::black;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      Color opposite = color[v] == Color::black ? Color::white : Color::black;
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int w) {
        if (!seen[w]) {
          seen[w] = true;
          color[w] = opposite;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.all_vertices();
  while (left != 0) {
    VertexMask comp = left & (~left + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cyclomatic number needs a connected graph");
  return g.size() - g.order() + 1;
}

namespace {

// Joint colour refinement of two graphs so that colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> cg(n), ch(n);
  for (int v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  int classes = -1;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& x, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      for_each_vertex(x.neighbors(v), [&](int w) { nb.push_back(c[w]); });
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (int v = 0; v < n; ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    for (auto& s : sg) ids.emplace(s, 0);
    for (auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    if (next == classes) break;
    classes = next;
  }
  return {cg, ch};
}

}  // namespace

std::optional<VertexMap> isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  auto [cg, ch] = refine_jointly(g, h);
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];

  // Visit order: smallest colour class first, then prefer vertices adjacent
  // to the already ordered prefix.
  std::vector<int> order;
  VertexMask placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    auto key = [&](int v) {
      bool linked = (g.neighbors(v) & placed) != 0;
      return std::make_tuple(!linked, class_size[cg[v]], -g.degree(v), v);
    };
    for (int v = 0; v < n; ++v)
      if (!(placed >> v & 1U) && (best < 0 || key(v) < key(best))) best = v;
    order.push_back(best);
    placed |= vertex_bit(best);
  }

  VertexMap map(n, -1);
  VertexMask used = 0;
  std::vector<VertexMask> candidates(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (cg[v] == ch[w]) candidates[v] |= vertex_bit(w);

  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int v = order[depth];
    VertexMask mapped_nb = 0;  // images of already-mapped neighbours of v
    VertexMask mapped_all = 0;
    for (int i = 0; i < depth; ++i) {
      int s = order[i];
      mapped_all |= vertex_bit(map[s]);
      if (g.adjacent(v, s)) mapped_nb |= vertex_bit(map[s]);
    }
    VertexMask options = candidates[v] & ~used;
    while (options != 0) {
      int w = std::countr_zero(options);
      options &= options - 1;
      if ((h.neighbors(w) & mapped_all) != mapped_nb) continue;
      map[v] = w;
      used |= vertex_bit(w);
      if (self(self, depth + 1)) return true;
      used &= ~vertex_bit(w);
      map[v] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

Graph relabel(const Graph& g, const VertexMap& perm) {
  std::vector<Edge> es;
  es.reserve(g.size());
  for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), std::move(es));
}

// --- named constructions ------------------------------------------------------

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, std::move(es));
}

Graph theta_graph(const std::vector<int>& lengths) {
  int n = 2;
  std::vector<Edge> es;
  for (int len : lengths) {
    if (len < 1) throw GraphError("theta path length must be positive");
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      es.emplace_back(prev, n);
      prev = n++;
    }
    es.emplace_back(prev, 1);
  }
  return Graph(n, std::move(es));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> es = g.edges();
  for (const Edge& e : h.edges()) es.emplace_back(e.u + g.order(), e.v + g.order());
  return Graph(g.order() + h.order(), std::move(es));
}

}  // namespace forcing_lab
