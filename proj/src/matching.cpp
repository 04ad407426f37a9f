// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/matching.hpp"

#include <array>

namespace forcing_lab {

namespace {

// Edmonds' blossom algorithm on bit-row adjacency, restricted to `live`.
class Blossom {
 public:
  Blossom(const Graph& g, VertexMask live) : g_(g), live_(live) { mate_.fill(-1); }

  // Greedy start; cheap and usually close to perfect.
  void seed() {
    for_each_vertex(live_, [&](int v) {
      if (mate_[v] != -1) return;
      VertexMask free = g_.neighbors(v) & live_;
      for_each_vertex(free, [&](int w) {
        if (mate_[v] == -1 && mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
        }
      });
    });
  }

  // Augments from every exposed vertex. With `stop_on_failure`, returns false
  // at the first vertex that stays exposed (it can never be covered later).
  bool augment_all(bool stop_on_failure) {
    bool perfect = true;
    for_each_vertex(live_, [&](int root) {
      if (!perfect && stop_on_failure) return;
      if (mate_[root] != -1) return;
      int v = find_path(root);
      if (v == -1) {
        perfect = false;
        return;
      }
      while (v != -1) {
        int pv = parent_[v];
        int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    });
    return perfect;
  }

  Matching matching() const {
    Matching m;
    for_each_vertex(live_, [&](int v) {
      if (mate_[v] > v) m.set(g_.edge_index(v, mate_[v]));
    });
    return m;
  }

 private:
  int lca(int a, int b) const {
    VertexMask seen = 0;
    for (;;) {
      a = base_[a];
      seen |= vertex_bit(a);
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen >> b & 1U) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child, VertexMask& in_blossom) {
    while (base_[v] != b) {
      in_blossom |= vertex_bit(base_[v]) | vertex_bit(base_[mate_[v]]);
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    VertexMask used = vertex_bit(root);
    parent_.fill(-1);
    for_each_vertex(live_, [&](int v) { base_[v] = v; });
    std::array<int, kMaxVertices> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      VertexMask nbrs = g_.neighbors(v) & live_;
      while (nbrs != 0) {
        int to = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          int cur = lca(v, to);
          VertexMask in_blossom = 0;
          mark_path(v, cur, to, in_blossom);
          mark_path(to, cur, v, in_blossom);
          for_each_vertex(live_, [&](int i) {
            if (in_blossom >> base_[i] & 1U) {
              base_[i] = cur;
              if (!(used >> i & 1U)) {
                used |= vertex_bit(i);
                queue[tail++] = i;
              }
            }
          });
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          int next = mate_[to];
          used |= vertex_bit(next);
          queue[tail++] = next;
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexMask live_;
  std::array<int, kMaxVertices> mate_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
};

}  // namespace

Matching maximum_matching(const Graph& g, VertexMask within) {
  within &= g.all_vertices();
  Blossom b(g, within);
  b.seed();
  b.augment_all(false);
  return b.matching();
}

bool is_matchable(const Graph& g, VertexMask within) {
  within &= g.all_vertices();
  if (std::popcount(within) % 2 != 0) return false;
  if (within == 0) return true;
  bool isolated = false;
  for_each_vertex(within, [&](int v) {
    if ((g.neighbors(v) & within) == 0) isolated = true;
  });
  if (isolated) return false;
  Blossom b(g, within);
  b.seed();
  return b.augment_all(true);
}

bool is_matching(const Graph& g, const EdgeMask& m) {
  VertexMask covered = 0;
  bool ok = m.is_subset_of(g.all_edges());
  m.for_each([&](int i) {
    VertexMask ends = vertex_bit(g.edge(i).u) | vertex_bit(g.edge(i).v);
    if (covered & ends) ok = false;
    covered |= ends;
  });
  return ok;
}

bool is_perfect_matching(const Graph& g, const EdgeMask& m) {
  return is_matching(g, m) && g.endpoints(m) == g.all_vertices();
}

namespace {

bool enumerate(const Graph& g, VertexMask left, Matching& current,
               const std::function<bool(const Matching&)>& visit) {
  if (left == 0) return visit(current);
  int v = std::countr_zero(left);
  VertexMask partners = g.neighbors(v) & left;
  while (partners != 0) {
    int w = std::countr_zero(partners);
    partners &= partners - 1;
    VertexMask rest = left & ~vertex_bit(v) & ~vertex_bit(w);
    if (!is_matchable(g, rest)) continue;
    int e = g.edge_index(v, w);
    current.set(e);
    bool go_on = enumerate(g, rest, current, visit);
    current.reset(e);
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_perfect_matching(const Graph& g, VertexMask within,
                               const std::function<bool(const Matching&)>& visit) {
  within &= g.all_vertices();
  if (!is_matchable(g, within)) return;
  Matching current;
  enumerate(g, within, current, visit);
}

std::vector<Matching> perfect_matchings(const Graph& g, std::size_t cap) {
  std::vector<Matching> out;
  bool exceeded = false;
  for_each_perfect_matching(g, [&](const Matching& m) {
    if (out.size() >= cap) {
      exceeded = true;
      return false;
    }
    out.push_back(m);
    return true;
  });
  if (exceeded) throw CapExceeded("more than " + std::to_string(cap) + " perfect matchings");
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  std::uint64_t count = 0;
  for_each_perfect_matching(g, [&](const Matching&) {
    ++count;
    return true;
  });
  return count;
}

EdgeMask allowed_edges(const Graph& g) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  EdgeMask allowed;
  const VertexMask all = g.all_vertices();
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (is_matchable(g, all & ~vertex_bit(e.u) & ~vertex_bit(e.v))) allowed.set(i);
  }
  return allowed;
}

bool is_matching_covered(const Graph& g) {
  if (!is_connected(g) || !is_matchable(g)) return false;
  const VertexMask all = g.all_vertices();
  for (const Edge& e : g.edges())
    if (!is_matchable(g, all & ~vertex_bit(e.u) & ~vertex_bit(e.v))) return false;
  return true;
}

ElementaryDecomposition elementary_components(const Graph& g) {
  EdgeMask allowed = allowed_edges(g);
  ElementaryDecomposition out;
  out.forbidden = g.all_edges() - allowed;
  Graph sub = g.spanning_subgraph(allowed);
  for (VertexMask comp : connected_components(sub)) {
    out.vertices.push_back(comp);
    out.edges.push_back(g.induced_edges(comp) & allowed);
  }
  return out;
}

}  // namespace forcing_lab
