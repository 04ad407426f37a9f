// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations for small graphs. They read only the
// Graph container (vertices, sorted edges) and recompute everything from the
// definitions by exhaustive enumeration, so they share no code with the
// algorithms under test. Edge sets are 64-bit masks over edge indices.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "forcing_lab/graph.hpp"

namespace oracle {

using forcing_lab::Edge;
using forcing_lab::Graph;
using Mask = std::uint64_t;
using VMask = std::uint32_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }

inline Mask from_edge_mask(const forcing_lab::EdgeMask& e) {
  Mask m = 0;
  for (int i = 0; i < 64; ++i)
    if (e.test(i)) m |= bit(i);
  return m;
}

inline forcing_lab::EdgeMask to_edge_mask(Mask m) {
  forcing_lab::EdgeMask e;
  for (int i = 0; i < 64; ++i)
    if (m & bit(i)) e.set(i);
  return e;
}

inline Mask all_edges(const Graph& g) { return g.size() == 64 ? ~Mask{0} : bit(g.size()) - 1; }
inline VMask all_vertices(const Graph& g) { return (VMask{1} << g.order()) - 1; }

inline VMask endpoints(const Graph& g, Mask edges) {
  VMask v = 0;
  for (int i = 0; i < g.size(); ++i)
    if (edges & bit(i)) v |= (VMask{1} << g.edge(i).u) | (VMask{1} << g.edge(i).v);
  return v;
}

inline Mask induced(const Graph& g, VMask vs) {
  Mask m = 0;
  for (int i = 0; i < g.size(); ++i)
    if ((vs >> g.edge(i).u & 1U) && (vs >> g.edge(i).v & 1U)) m |= bit(i);
  return m;
}

inline int degree_in(const Graph& g, Mask edges, int v) {
  int d = 0;
  for (int i = 0; i < g.size(); ++i)
    if ((edges & bit(i)) && g.edge(i).touches(v)) ++d;
  return d;
}

/// Pairwise disjoint edges.
inline bool is_matching(const Graph& g, Mask m) {
  VMask seen = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (!(m & bit(i))) continue;
    VMask ends = (VMask{1} << g.edge(i).u) | (VMask{1} << g.edge(i).v);
    if (seen & ends) return false;
    seen |= ends;
  }
  return true;
}

/// Visits every k-subset of the set bits of `pool`; stops when visit returns false.
inline bool for_each_subset_of_size(Mask pool, int k, const std::function<bool(Mask)>& visit) {
  std::vector<int> idx;
  for (int i = 0; i < 64; ++i)
    if (pool & bit(i)) idx.push_back(i);
  const int n = static_cast<int>(idx.size());
  if (k > n) return true;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Mask s = 0;
    for (int p : pick) s |= bit(idx[p]);
    if (!visit(s)) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Perfect matchings of G[within] using only edges in `allowed`: all
/// (|within|/2)-subsets of edges checked directly.
inline std::vector<Mask> perfect_matchings(const Graph& g, VMask within, Mask allowed) {
  std::vector<Mask> out;
  const int k = std::popcount(within);
  if (k % 2) return out;
  if (k == 0) return {0};
  Mask pool = oracle::induced(g, within) & allowed;
  oracle::for_each_subset_of_size(pool, k / 2, [&](Mask s) {
    if (oracle::is_matching(g, s) && oracle::endpoints(g, s) == within) out.push_back(s);
    return true;
  });
  return out;
}
inline std::vector<Mask> perfect_matchings(const Graph& g) {
  return oracle::perfect_matchings(g, oracle::all_vertices(g), oracle::all_edges(g));
}

inline bool matchable(const Graph& g, VMask within) {
  return !oracle::perfect_matchings(g, within, oracle::all_edges(g)).empty();
}
inline bool matchable(const Graph& g) { return oracle::matchable(g, oracle::all_vertices(g)); }

inline int maximum_matching_size(const Graph& g) {
  for (int k = g.order() / 2; k > 0; --k) {
    bool found = false;
    oracle::for_each_subset_of_size(oracle::all_edges(g), k, [&](Mask s) {
      found = oracle::is_matching(g, s);
      return !found;
    });
    if (found) return k;
  }
  return 0;
}

inline bool connected(const Graph& g, VMask vs, Mask edges) {
  if (vs == 0) return true;
  VMask reach = vs & (~vs + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < g.size(); ++i) {
      if (!(edges & bit(i))) continue;
      VMask a = VMask{1} << g.edge(i).u, b = VMask{1} << g.edge(i).v;
      if ((reach & a) && !(reach & b) && (vs & b)) reach |= b, grew = true;
      if ((reach & b) && !(reach & a) && (vs & a)) reach |= a, grew = true;
    }
  }
  return reach == vs;
}

inline bool matching_covered(const Graph& g) {
  if (!oracle::connected(g, oracle::all_vertices(g), oracle::all_edges(g))) return false;
  Mask covered = 0;
  for (Mask m : oracle::perfect_matchings(g)) covered |= m;
  return covered == oracle::all_edges(g) && g.size() > 0;
}

/// Every simple cycle as an edge mask: each vertex subset, each cyclic order
/// starting at its least vertex with second < last.
inline std::vector<Mask> cycles(const Graph& g) {
  std::set<Mask> out;
  const int n = g.order();
  for (VMask s = 1; s < (VMask{1} << n); ++s) {
    if (std::popcount(s) < 3) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1U) vs.push_back(v);
    std::vector<int> rest(vs.begin() + 1, vs.end());
    do {
      if (rest.front() > rest.back()) continue;
      Mask m = 0;
      bool ok = true;
      int prev = vs.front();
      for (std::size_t i = 0; i <= rest.size() && ok; ++i) {
        int next = i < rest.size() ? rest[i] : vs.front();
        int e = g.edge_index(prev, next);
        ok = e >= 0;
        if (ok) m |= bit(e);
        prev = next;
      }
      if (ok) out.insert(m);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return {out.begin(), out.end()};
}

inline bool bipartite(const Graph& g) {
  for (Mask c : oracle::cycles(g))
    if (popcount(c) % 2) return false;
  return true;
}

/// Even cycles whose removal leaves a matchable graph.
inline std::vector<Mask> conformal_cycles(const Graph& g) {
  std::vector<Mask> out;
  for (Mask c : oracle::cycles(g))
    if (popcount(c) % 2 == 0 && oracle::matchable(g, oracle::all_vertices(g) & ~oracle::endpoints(g, c))) out.push_back(c);
  return out;
}

/// C is M-alternating iff M holds a perfect matching of C.
inline bool alternating(Mask cycle, Mask m) { return 2 * popcount(cycle & m) == popcount(cycle); }

/// Cycles alternating with respect to some perfect matching.
inline std::vector<Mask> alternating_somewhere(const Graph& g) {
  auto pms = oracle::perfect_matchings(g);
  std::vector<Mask> out;
  for (Mask c : oracle::cycles(g))
    if (popcount(c) % 2 == 0 &&
        std::any_of(pms.begin(), pms.end(), [&](Mask m) { return oracle::alternating(c, m); }))
      out.push_back(c);
  return out;
}

/// Two vertex-disjoint odd cycles with a matchable remainder.
inline bool has_odd_conformal_bicycle(const Graph& g) {
  std::vector<Mask> odd;
  for (Mask c : oracle::cycles(g))
    if (popcount(c) % 2) odd.push_back(c);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      VMask a = oracle::endpoints(g, odd[i]), b = oracle::endpoints(g, odd[j]);
      if (!(a & b) && oracle::matchable(g, oracle::all_vertices(g) & ~a & ~b)) return true;
    }
  return false;
}

/// Smallest edge set on which all perfect matchings have distinct traces.
inline int global_forcing_number(const Graph& g) {
  auto pms = oracle::perfect_matchings(g);
  for (int k = 0; k <= g.size(); ++k) {
    bool found = false;
    oracle::for_each_subset_of_size(oracle::all_edges(g), k, [&](Mask s) {
      std::set<Mask> traces;
      for (Mask m : pms) traces.insert(m & s);
      found = traces.size() == pms.size();
      return !found;
    });
    if (found) return k;
  }
  return -1;
}

/// Smallest S outside M such that G - S has M as its only perfect matching.
inline int anti_forcing_number(const Graph& g, Mask m) {
  Mask pool = oracle::all_edges(g) & ~m;
  for (int k = 0; k <= popcount(pool); ++k) {
    bool found = false;
    oracle::for_each_subset_of_size(pool, k, [&](Mask s) {
      found = oracle::perfect_matchings(g, oracle::all_vertices(g), oracle::all_edges(g) & ~s).size() == 1;
      return !found;
    });
    if (found) return k;
  }
  return -1;
}

inline int max_anti_forcing_number(const Graph& g) {
  int best = 0;
  for (Mask m : oracle::perfect_matchings(g)) best = std::max(best, oracle::anti_forcing_number(g, m));
  return best;
}

/// The graph formed by an edge subset, vertices relabeled densely.
inline Graph subgraph(const Graph& g, Mask edges) {
  VMask vs = oracle::endpoints(g, edges);
  std::vector<int> local(g.order(), -1);
  int k = 0;
  for (int v = 0; v < g.order(); ++v)
    if (vs >> v & 1U) local[v] = k++;
  std::vector<Edge> es;
  for (int i = 0; i < g.size(); ++i)
    if (edges & bit(i)) es.emplace_back(local[g.edge(i).u], local[g.edge(i).v]);
  return Graph(std::max(k, 1), es);
}

/// Every conformal matchable subgraph H (edge set, vertices its ends) has gf = Af.
inline bool strongly_uniform(const Graph& g) {
  for (Mask s = 1; s <= oracle::all_edges(g); ++s) {
    VMask vs = oracle::endpoints(g, s);
    if (!oracle::matchable(g, oracle::all_vertices(g) & ~vs)) continue;
    Graph h = oracle::subgraph(g, s);
    if (!oracle::matchable(h)) continue;
    if (oracle::global_forcing_number(h) != oracle::max_anti_forcing_number(h)) return false;
  }
  return true;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges())
      if (!b.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// H (given as an edge set of g) is a bisubdivision of j: some injection of
/// V(j) into V(H) makes H's threads between images exactly the edges of j,
/// each of odd length, with every other vertex of H of degree two.
inline bool is_bisubdivision(const Graph& g, Mask h, const Graph& j) {
  const VMask hv = oracle::endpoints(g, h);
  if (std::popcount(hv) < j.order() || popcount(h) < j.size()) return false;
  std::vector<int> hverts;
  for (int v = 0; v < g.order(); ++v)
    if (hv >> v & 1U) hverts.push_back(v);
  std::vector<int> deg(g.order(), 0);
  for (int v : hverts) deg[v] = oracle::degree_in(g, h, v);
  std::vector<int> jdeg(j.order());
  for (int v = 0; v < j.order(); ++v) jdeg[v] = j.degree(v);
  // every H vertex of degree != 2 must be an image
  int forced = 0;
  for (int v : hverts)
    if (deg[v] != 2) ++forced;
  if (forced > j.order()) return false;

  std::vector<int> img(j.order(), -1);
  VMask used = 0;
  auto check = [&]() {
    VMask images = used;
    for (int v : hverts)
      if (deg[v] != 2 && !(images >> v & 1U)) return false;
    std::vector<int> pre(g.order(), -1);
    for (int x = 0; x < j.order(); ++x) pre[img[x]] = x;
    std::set<std::pair<int, int>> got;
    Mask seen = 0;
    for (int i = 0; i < g.size(); ++i) {
      if (!(h & bit(i)) || (seen & bit(i))) continue;
      const Edge& e = g.edge(i);
      int start, cur;
      if (pre[e.u] >= 0) start = e.u, cur = e.v;
      else if (pre[e.v] >= 0) start = e.v, cur = e.u;
      else continue;  // thread interior, reached from an end
      seen |= bit(i);
      int len = 1, last = i;
      while (pre[cur] < 0) {
        int nxt = -1;
        for (int k = 0; k < g.size(); ++k)
          if ((h & bit(k)) && k != last && g.edge(k).touches(cur)) nxt = k;
        if (nxt < 0) return false;
        seen |= bit(nxt);
        cur = g.edge(nxt).other(cur);
        last = nxt;
        ++len;
      }
      if (len % 2 == 0) return false;
      int a = pre[start], b = pre[cur];
      if (a == b) return false;
      if (!got.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    if (seen != h) return false;  // a cycle avoiding all images
    if (static_cast<int>(got.size()) != j.size()) return false;
    for (const Edge& e : j.edges())
      if (!got.count({e.u, e.v})) return false;
    return true;
  };
  std::function<bool(int)> place = [&](int x) {
    if (x == j.order()) return check();
    for (int v : hverts) {
      if (used >> v & 1U) continue;
      if (deg[v] != jdeg[x]) continue;
      img[x] = v;
      used |= VMask{1} << v;
      if (place(x + 1)) return true;
      used &= ~(VMask{1} << v);
    }
    return false;
  };
  return place(0);
}

/// Some edge subset of g with a matchable remainder is a bisubdivision of j.
inline bool has_conformal_minor(const Graph& g, const Graph& j) {
  if (g.order() < j.order() || g.size() < j.size()) return false;
  for (Mask s = 1; s <= oracle::all_edges(g); ++s) {
    if (popcount(s) < j.size()) continue;
    if (!oracle::matchable(g, oracle::all_vertices(g) & ~oracle::endpoints(g, s))) continue;
    if (oracle::is_bisubdivision(g, s, j)) return true;
  }
  return false;
}

/// Minimum subset of `universe` meeting every target, by increasing size.
inline int min_hitting_set_size(Mask universe, const std::vector<Mask>& targets) {
  for (int k = 0; k <= popcount(universe); ++k) {
    bool found = false;
    oracle::for_each_subset_of_size(universe, k, [&](Mask s) {
      found = std::all_of(targets.begin(), targets.end(), [&](Mask t) { return (t & s) != 0; });
      return !found;
    });
    if (found) return k;
  }
  return -1;
}

}  // namespace oracle
