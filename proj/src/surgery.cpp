// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/surgery.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "forcing_lab/cycles.hpp"
#include "thread_embedding.hpp"

namespace forcing_lab {

SubdivisionPlan parse_plan(const Graph& g, std::string_view text) {
  SubdivisionPlan plan;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',' || c == ';') c = ' ';
  std::size_t i = 0;
  while (i < buf.size()) {
    while (i < buf.size() && buf[i] == ' ') ++i;
    std::size_t j = i;
    while (j < buf.size() && buf[j] != ' ') ++j;
    if (j == i) break;
    std::string tok = buf.substr(i, j - i);
    i = j;
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError(0, "expected `u-v:p`, got `" + tok + "`");
    std::vector<Edge> e = parse_edge_list(tok.substr(0, colon), g.order());
    int value = 0;
    const char* begin = tok.data() + colon + 1;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || e.size() != 1) throw ParseError(0, "malformed plan entry `" + tok + "`");
    if (g.edge_index(e[0]) < 0) throw GraphError("plan edge " + format_edge(e[0]) + " is not in the graph");
    if (!plan.entries.emplace(e[0], value).second)
      throw ParseError(0, "edge " + format_edge(e[0]) + " planned twice");
  }
  return plan;
}

namespace {

void check_plan_edges(const Graph& g, const SubdivisionPlan& plan) {
  for (const auto& [e, p] : plan.entries)
    if (e.u < 0 || e.v >= g.order() || g.edge_index(e) < 0)
      throw GraphError("plan edge " + format_edge(e) + " is not in the graph");
}

// Shared builder: each planned edge becomes a path with `inner(e)` new
// vertices plus extra edges between path positions.
template <class Inner, class Extra>
SurgeryResult rebuild(const Graph& g, const SubdivisionPlan& plan, Inner inner, Extra extra) {
  SurgeryResult r;
  r.original_order = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!plan.entries.count(e)) edges.push_back(e);
  int next = g.order();
  for (const auto& [e, p] : plan.entries) {
    int k = inner(p);
    std::vector<int> path{e.u};
    for (int i = 0; i < k; ++i) {
      path.push_back(next++);
      r.origin.push_back(e);
    }
    path.push_back(e.v);
    if (next > kMaxVertices)
      throw GraphError("result would exceed " + std::to_string(kMaxVertices) + " vertices");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    for (auto [a, b] : extra(p)) edges.emplace_back(path[a], path[b]);
    r.replacement_paths.emplace(e, std::move(path));
  }
  r.graph = Graph(next, std::move(edges));
  return r;
}

}  // namespace

SurgeryResult bisubdivide(const Graph& g, const SubdivisionPlan& plan) {
  check_plan_edges(g, plan);
  for (const auto& [e, len] : plan.entries)
    if (len < 1 || len % 2 == 0)
      throw GraphError("bisubdivision length for " + format_edge(e) + " must be odd and positive");
  return rebuild(
      g, plan, [](int len) { return len - 1; },
      [](int) { return std::vector<std::pair<int, int>>{}; });
}

Matching matching_bijection(const Graph& g, const SurgeryResult& r, const Matching& m) {
  if (!is_perfect_matching(g, m)) throw PreconditionError("not a perfect matching of the original graph");
  Matching out;
  m.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (!r.replacement_paths.count(e)) out.set(r.graph.edge_index(e));
  });
  for (const auto& [e, path] : r.replacement_paths) {
    bool in_m = m.test(g.edge_index(e));
    for (std::size_t i = 1; i < path.size(); ++i) {
      bool odd = i % 2 == 1;
      if (odd == in_m) out.set(r.graph.edge_index(path[i - 1], path[i]));
    }
  }
  return out;
}

SurgeryResult quad_subdivide(const Graph& g, const SubdivisionPlan& plan) {
  check_plan_edges(g, plan);
  for (const auto& [e, k] : plan.entries)
    if (k < 0) throw GraphError("quadrilateral parameter for " + format_edge(e) + " must be nonnegative");
  return rebuild(
      g, plan, [](int k) { return 4 * k; },
      [](int k) {
        std::vector<std::pair<int, int>> chords;
        for (int i = 1; i <= k; ++i) chords.emplace_back(4 * i - 3, 4 * i);
        return chords;
      });
}

SurgeryResult quad_gadget(const Graph& g, const Edge& e) {
  SubdivisionPlan plan;
  plan.entries.emplace(e, 1);
  return quad_subdivide(g, plan);
}

std::optional<BisubdivisionMap> recognize_bisubdivision(const Graph& h, const Graph& j,
                                                        const EdgeMask* constraint) {
  detail::PatternShape shape = detail::analyze_pattern(j);
  detail::ThreadSearchOptions opt;
  opt.spanning = true;
  opt.rule.stretchable = constraint;
  opt.require_conformal = false;
  opt.node_budget = std::numeric_limits<std::uint64_t>::max();
  detail::ThreadEmbedding emb;
  if (detail::search_threads(h, shape, opt, emb) != detail::SearchStatus::found) return std::nullopt;
  detail::EdgePaths ep = detail::expand_threads(h, shape, emb, opt.rule);
  return BisubdivisionMap{std::move(ep.vertex_map), std::move(ep.edge_paths)};
}

bool validate_bisubdivision(const Graph& h, const Graph& j, const BisubdivisionMap& m,
                            const EdgeMask* constraint) {
  if (static_cast<int>(m.vertex_map.size()) != j.order()) return false;
  if (static_cast<int>(m.edge_paths.size()) != j.size()) return false;
  VertexMask seen = 0;
  for (int v : m.vertex_map) {
    if (v < 0 || v >= h.order() || (seen >> v & 1U)) return false;
    seen |= vertex_bit(v);
  }
  EdgeMask used_edges;
  int edge_total = 0;
  for (int e = 0; e < j.size(); ++e) {
    const auto& p = m.edge_paths[e];
    int len = static_cast<int>(p.size()) - 1;
    if (len < 1 || len % 2 == 0) return false;
    if (p.front() != m.vertex_map[j.edge(e).u] || p.back() != m.vertex_map[j.edge(e).v]) return false;
    if (len > 1 && constraint != nullptr && !constraint->test(e)) return false;
    for (int i = 0; i < len; ++i) {
      if (p[i] < 0 || p[i] >= h.order() || p[i + 1] < 0 || p[i + 1] >= h.order()) return false;
      int idx = h.edge_index(p[i], p[i + 1]);
      if (idx < 0 || used_edges.test(idx)) return false;
      used_edges.set(idx);
      ++edge_total;
    }
    for (int i = 1; i < len; ++i) {
      if (seen >> p[i] & 1U) return false;
      seen |= vertex_bit(p[i]);
    }
  }
  return seen == h.all_vertices() && edge_total == h.size();
}

// --- ear decomposition ------------------------------------------------------

namespace {

class EarBuilder {
 public:
  EarBuilder(const Graph& g, const Coloring& color) : g_(g), color_(color) {}

  bool build(EarDecomposition& out) {
    out.base = g_.edge(0);
    vertices_ = vertex_bit(out.base.u) | vertex_bit(out.base.v);
    edges_.set(0);
    ears_.clear();
    if (!grow()) return false;
    out.ears = ears_;
    return true;
  }

 private:
  bool acceptable(VertexMask vs, const EdgeMask& es) const {
    if (!is_conformal(g_, vs)) return false;
    return is_matching_covered(extract(g_, es, vs).graph);
  }

  // Candidate ears ordered by length, then by vertex sequence.
  std::vector<std::vector<int>> candidates() const {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v, VertexMask on_path) -> void {
      for_each_vertex(g_.neighbors(v), [&](int w) {
        if (edges_.test(g_.edge_index(v, w))) return;
        if (vertices_ >> w & 1U) {
          if (w != path.front() && color_[w] != color_[path.front()]) {
            path.push_back(w);
            out.push_back(path);
            path.pop_back();
          }
          return;
        }
        if (on_path >> w & 1U) return;
        path.push_back(w);
        self(self, w, on_path | vertex_bit(w));
        path.pop_back();
      });
    };
    for_each_vertex(vertices_, [&](int x) {
      path.assign(1, x);
      dfs(dfs, x, vertex_bit(x));
    });
    // Each ear is found from both ends; keep the orientation starting lower.
    std::erase_if(out, [](const std::vector<int>& p) { return p.front() > p.back(); });
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  bool grow() {
    if (edges_ == g_.all_edges()) return true;
    for (const auto& ear : candidates()) {
      VertexMask vs = vertices_;
      EdgeMask es = edges_;
      for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
        vs |= vertex_bit(ear[i]) | vertex_bit(ear[i + 1]);
        es.set(g_.edge_index(ear[i], ear[i + 1]));
      }
      if (!acceptable(vs, es)) continue;
      std::swap(vs, vertices_);
      std::swap(es, edges_);
      ears_.push_back(ear);
      if (grow()) return true;
      ears_.pop_back();
      vertices_ = vs;
      edges_ = es;
    }
    return false;
  }

  const Graph& g_;
  const Coloring& color_;
  VertexMask vertices_ = 0;
  EdgeMask edges_;
  std::vector<std::vector<int>> ears_;
};

}  // namespace

EarDecomposition bipartite_ear_decomposition(const Graph& g) {
  auto color = bipartition(g);
  if (!color) throw PreconditionError("ear decomposition needs a bipartite graph");
  if (!is_matching_covered(g)) throw PreconditionError("ear decomposition needs a matching covered graph");
  EarDecomposition d;
  EarBuilder builder(g, *color);
  if (!builder.build(d)) throw std::logic_error("no bipartite ear decomposition found");
  return d;
}

bool validate_ear_decomposition(const Graph& g, const EarDecomposition& d) {
  auto color = bipartition(g);
  if (!color) return false;
  int base = g.edge_index(d.base);
  if (d.base.u < 0 || d.base.v >= g.order() || base < 0) return false;
  VertexMask vs = vertex_bit(d.base.u) | vertex_bit(d.base.v);
  EdgeMask es;
  es.set(base);
  if (!is_conformal(g, vs)) return false;
  for (const auto& ear : d.ears) {
    if (ear.size() < 2) return false;
    int x = ear.front();
    int y = ear.back();
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) return false;
    if (!(vs >> x & 1U) || !(vs >> y & 1U) || x == y || (*color)[x] == (*color)[y]) return false;
    if ((ear.size() - 1) % 2 == 0) return false;
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      if (ear[i + 1] < 0 || ear[i + 1] >= g.order()) return false;
      int idx = g.edge_index(ear[i], ear[i + 1]);
      if (idx < 0 || es.test(idx)) return false;
      es.set(idx);
      if (i + 1 < ear.size() - 1) {
        if (vs >> ear[i + 1] & 1U) return false;
        vs |= vertex_bit(ear[i + 1]);
      }
    }
    if (!is_conformal(g, vs) || !is_matching_covered(extract(g, es, vs).graph)) return false;
  }
  return es == g.all_edges() && vs == g.all_vertices();
}

}  // namespace forcing_lab
