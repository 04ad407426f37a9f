// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/cycles.hpp"

#include <algorithm>
#include <set>

namespace forcing_lab {

Cycle make_cycle(const Graph& g, std::vector<int> vertices) {
  const int len = static_cast<int>(vertices.size());
  if (len < 3) throw GraphError("a cycle needs at least 3 vertices");
  Cycle c;
  for (int i = 0; i < len; ++i) {
    int a = vertices[i];
    int b = vertices[(i + 1) % len];
    if (a < 0 || a >= g.order()) throw GraphError("cycle vertex out of range");
    if (c.vertex_set >> a & 1U) throw GraphError("cycle repeats vertex " + std::to_string(a + 1));
    c.vertex_set |= vertex_bit(a);
    if (b < 0 || b >= g.order() || !g.adjacent(a, b))
      throw GraphError("cycle uses non-edge " + format_edge(Edge(a, b)));
    c.edges.set(g.edge_index(a, b));
  }
  auto low = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), low, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());
  c.vertices = std::move(vertices);
  return c;
}

Cycle cycle_from_edges(const Graph& g, const EdgeMask& edges) {
  VertexMask vs = g.endpoints(edges);
  if (vs == 0) throw GraphError("empty edge set is not a cycle");
  int start = std::countr_zero(vs);
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  for (;;) {
    int next = -1;
    int found = 0;
    for_each_vertex(g.neighbors(cur), [&](int w) {
      if (!edges.test(g.edge_index(cur, w))) return;
      ++found;
      if (w != prev && next == -1) next = w;
    });
    if (found != 2) throw GraphError("edge set is not a cycle");
    if (next == start) break;
    if (std::find(order.begin(), order.end(), next) != order.end())
      throw GraphError("edge set is not a cycle");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  Cycle c = make_cycle(g, order);
  if (!(c.edges == edges)) throw GraphError("edge set is not a single cycle");
  return c;
}

std::string format_cycle(const Cycle& c) {
  std::string out;
  for (int v : c.vertices) out += std::to_string(v + 1) + "-";
  out += std::to_string(c.vertices.front() + 1);
  return out;
}

namespace {

struct Walker {
  const Graph& g;
  int min_len;
  int max_len;
  const std::function<bool(const Cycle&)>& visit;
  int anchor = 0;
  VertexMask allowed = 0;
  std::vector<int> path;
  Cycle scratch;

  bool extend(int v, VertexMask on_path, const EdgeMask& edges) {
    const int len = static_cast<int>(path.size());
    if (len >= min_len && len >= 3 && g.adjacent(v, anchor) && path[1] < v) {
      scratch.vertices = path;
      scratch.edges = edges;
      scratch.edges.set(g.edge_index(v, anchor));
      scratch.vertex_set = on_path;
      if (!visit(scratch)) return false;
    }
    if (len >= max_len) return true;
    VertexMask next = g.neighbors(v) & allowed & ~on_path;
    while (next != 0) {
      int w = std::countr_zero(next);
      next &= next - 1;
      path.push_back(w);
      EdgeMask grown = edges;
      grown.set(g.edge_index(v, w));
      bool go_on = extend(w, on_path | vertex_bit(w), grown);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit,
                    int min_len, int max_len) {
  Walker w{g, min_len, max_len, visit, 0, 0, {}, {}};
  for (int s = 0; s < g.order(); ++s) {
    w.anchor = s;
    w.allowed = g.all_vertices() & ~((vertex_bit(s) << 1) - 1);
    w.path.assign(1, s);
    if (!w.extend(s, vertex_bit(s), EdgeMask{})) return;
  }
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap) {
  std::vector<Cycle> out;
  bool exceeded = false;
  for_each_cycle(g, [&](const Cycle& c) {
    if (out.size() >= cap) {
      exceeded = true;
      return false;
    }
    out.push_back(c);
    return true;
  });
  if (exceeded) throw CapExceeded("more than " + std::to_string(cap) + " cycles");
  return out;
}

bool is_conformal(const Graph& g, VertexMask vertices) {
  return is_matchable(g, g.all_vertices() & ~vertices);
}

bool is_conformal_subgraph(const Graph& g, const std::vector<Edge>& edges, VertexMask extra) {
  EdgeMask m = g.mask_of(edges);
  if ((extra & ~g.all_vertices()) != 0) throw GraphError("vertex out of range");
  return is_conformal(g, g.endpoints(m) | extra);
}

std::vector<Cycle> conformal_cycles(const Graph& g, std::size_t cap) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  std::vector<Cycle> out;
  bool exceeded = false;
  for_each_cycle(g, [&](const Cycle& c) {
    if (c.is_odd() || !is_conformal(g, c.vertex_set)) return true;
    if (out.size() >= cap) {
      exceeded = true;
      return false;
    }
    out.push_back(c);
    return true;
  });
  if (exceeded) throw CapExceeded("more than " + std::to_string(cap) + " conformal cycles");
  return out;
}

std::vector<Cycle> conformal_cycles_via_matchings(const Graph& g, std::size_t cap) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  std::vector<Cycle> cycles = enumerate_cycles(g, cap);
  std::vector<Matching> matchings = perfect_matchings(g);
  std::vector<Cycle> out;
  for (const Cycle& c : cycles) {
    for (const Matching& m : matchings) {
      if (is_alternating(c, m)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

bool is_alternating(const Cycle& c, const Matching& m) {
  return !c.is_odd() && (c.edges & m).count() * 2 == c.length();
}

std::vector<Cycle> alternating_cycles(const Graph& g, const Matching& m, std::size_t cap) {
  if (!is_perfect_matching(g, m)) throw PreconditionError("not a perfect matching");
  std::vector<Cycle> out;
  bool exceeded = false;
  for_each_cycle(g, [&](const Cycle& c) {
    if (!is_alternating(c, m)) return true;
    if (out.size() >= cap) {
      exceeded = true;
      return false;
    }
    out.push_back(c);
    return true;
  });
  if (exceeded) throw CapExceeded("more than " + std::to_string(cap) + " alternating cycles");
  return out;
}

BnResult is_bn_graph(const Graph& g) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  BnResult result;
  const int n = g.order();
  const VertexMask all = g.all_vertices();
  std::vector<Cycle> shorter;  // odd cycles found at earlier lengths
  for (int len = 3; len + 3 <= n; len += 2) {
    std::vector<Cycle> level;
    for_each_cycle(g, [&](const Cycle& c) { level.push_back(c); return true; }, len, len);
    auto try_pair = [&](const Cycle& a, const Cycle& b) {
      if (a.vertex_set & b.vertex_set) return false;
      VertexMask rest = all & ~a.vertex_set & ~b.vertex_set;
      if (!is_matchable(g, rest)) return false;
      result.bn = false;
      result.witness = BicycleWitness{a, b, maximum_matching(g, rest)};
      return true;
    };
    // First cycle shorter than `len`, then both of length `len`.
    for (const Cycle& a : shorter)
      for (const Cycle& b : level)
        if (a.length() + len <= n && try_pair(a, b)) return result;
    if (2 * len <= n)
      for (std::size_t i = 0; i < level.size(); ++i)
        for (std::size_t j = i + 1; j < level.size(); ++j)
          if (try_pair(level[i], level[j])) return result;
    shorter.insert(shorter.end(), level.begin(), level.end());
  }
  return result;
}

}  // namespace forcing_lab
