// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/minors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "forcing_lab/matching.hpp"
#include "forcing_lab/surgery.hpp"
#include "thread_embedding.hpp"

namespace forcing_lab {

std::string_view to_string(MinorStatus s) {
  switch (s) {
    case MinorStatus::found: return "found";
    case MinorStatus::absent: return "absent";
    case MinorStatus::unknown: return "unknown";
  }
  return "?";
}

MinorSearch find_conformal_minor(const Graph& g, const Graph& j, std::uint64_t node_budget) {
  detail::PatternShape shape = detail::analyze_pattern(j);
  detail::ThreadSearchOptions opt;
  opt.node_budget = node_budget;
  detail::ThreadEmbedding emb;
  MinorSearch out;
  detail::SearchStatus s = detail::search_threads(g, shape, opt, emb, &out.nodes);
  if (s == detail::SearchStatus::absent) {
    out.status = MinorStatus::absent;
    return out;
  }
  if (s == detail::SearchStatus::unknown) {
    out.status = MinorStatus::unknown;
    return out;
  }
  out.status = MinorStatus::found;
  detail::EdgePaths ep = detail::expand_threads(g, shape, emb, opt.rule);
  MinorEmbedding m;
  m.branch_map = std::move(ep.vertex_map);
  m.path_map = std::move(ep.edge_paths);
  for (const auto& p : m.path_map)
    for (std::size_t i = 0; i < p.size(); ++i) {
      m.union_vertices |= vertex_bit(p[i]);
      if (i + 1 < p.size()) m.union_edges.set(g.edge_index(p[i], p[i + 1]));
    }
  for (int v : m.branch_map) m.union_vertices |= vertex_bit(v);
  out.embedding = std::move(m);
  return out;
}

bool validate_embedding(const Graph& g, const Graph& j, const MinorEmbedding& e) {
  if (static_cast<int>(e.branch_map.size()) != j.order()) return false;
  if (static_cast<int>(e.path_map.size()) != j.size()) return false;
  VertexMask seen = 0;
  for (int v : e.branch_map) {
    if (v < 0 || v >= g.order() || (seen >> v & 1U)) return false;
    seen |= vertex_bit(v);
  }
  EdgeMask edges;
  for (int i = 0; i < j.size(); ++i) {
    const auto& p = e.path_map[i];
    int len = static_cast<int>(p.size()) - 1;
    if (len < 1 || len % 2 == 0) return false;
    if (p.front() != e.branch_map[j.edge(i).u] || p.back() != e.branch_map[j.edge(i).v]) return false;
    for (int k = 0; k < len; ++k) {
      if (p[k + 1] < 0 || p[k + 1] >= g.order()) return false;
      int idx = g.edge_index(p[k], p[k + 1]);
      if (idx < 0 || edges.test(idx)) return false;
      edges.set(idx);
    }
    for (int k = 1; k < len; ++k) {
      if (seen >> p[k] & 1U) return false;
      seen |= vertex_bit(p[k]);
    }
  }
  if (!(edges == e.union_edges) || seen != e.union_vertices) return false;
  return is_matchable(g, g.all_vertices() & ~seen);
}

std::vector<ScreenHit> screen_catalog(const Graph& g, const std::vector<const CatalogEntry*>& entries,
                                      std::uint64_t node_budget, int jobs) {
  std::vector<MinorSearch> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
      results[i] = find_conformal_minor(g, entries[i]->graph, node_budget);
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < std::min<int>(jobs, static_cast<int>(entries.size())); ++w) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  std::vector<ScreenHit> hits;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (results[i].status == MinorStatus::absent) continue;
    hits.push_back({entries[i]->name, results[i].status, std::move(results[i].embedding)});
  }
  return hits;
}

MinorLattice::MinorLattice(std::vector<const CatalogEntry*> patterns) : patterns_(std::move(patterns)) {
  min_order_ = std::numeric_limits<int>::max();
  min_excess_ = std::numeric_limits<int>::max();
  for (const CatalogEntry* p : patterns_) {
    min_order_ = std::min(min_order_, p->graph.order());
    min_excess_ = std::min(min_excess_, p->graph.size() - p->graph.order());
  }
}

bool MinorLattice::contains_any(const Graph& g) {
  ElementaryDecomposition ed = elementary_components(g);
  for (std::size_t i = 0; i < ed.vertices.size(); ++i) {
    if (std::popcount(ed.vertices[i]) < min_order_) continue;
    if (component_has(extract(g, ed.edges[i], ed.vertices[i]).graph)) return true;
  }
  return false;
}

bool MinorLattice::component_has(const Graph& k) {
  if (k.order() < min_order_ || k.size() - k.order() < min_excess_) return false;
  std::string key = canonical_key(k);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  bool found = false;
  for (const CatalogEntry* p : patterns_) {
    if (p->graph.size() - p->graph.order() != k.size() - k.order() || p->graph.order() > k.order()) continue;
    if (recognize_bisubdivision(k, p->graph, nullptr)) {
      found = true;
      break;
    }
  }
  for (int e = 0; !found && e < k.size(); ++e) {
    EdgeMask rest = k.all_edges();
    rest.reset(e);
    Graph h = k.spanning_subgraph(rest);
    if (is_matchable(h) && contains_any(h)) found = true;
  }
  cache_.emplace(std::move(key), found);
  return found;
}

}  // namespace forcing_lab
