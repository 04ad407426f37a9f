// SPDX-License-Identifier: Apache-2.0

#include "thread_embedding.hpp"

#include <algorithm>
#include <stdexcept>

#include "forcing_lab/matching.hpp"

namespace forcing_lab::detail {

PatternShape analyze_pattern(const Graph& j) {
  PatternShape s;
  s.pattern = j;
  const int n = j.order();
  s.is_branch.assign(n, false);
  for (int v = 0; v < n; ++v) s.is_branch[v] = j.degree(v) != 2;
  s.bipartite = is_bipartite(j);

  std::vector<bool> edge_done(j.size(), false);
  auto walk = [&](int a, int first) {
    Thread t;
    t.a = a;
    t.vertices.push_back(a);
    int prev = a;
    int cur = first;
    t.edges.push_back(j.edge_index(a, first));
    while (!s.is_branch[cur]) {
      t.vertices.push_back(cur);
      VertexMask nb = j.neighbors(cur) & ~vertex_bit(prev);
      int next = std::countr_zero(nb);
      t.edges.push_back(j.edge_index(cur, next));
      prev = cur;
      cur = next;
    }
    t.vertices.push_back(cur);
    t.b = cur;
    for (int e : t.edges) edge_done[e] = true;
    s.threads.push_back(std::move(t));
  };
  auto threads_from = [&](int a) {
    for_each_vertex(j.neighbors(a), [&](int w) {
      if (!edge_done[j.edge_index(a, w)]) walk(a, w);
    });
  };
  for (int v = 0; v < n; ++v)
    if (s.is_branch[v]) threads_from(v);
  // Cycle components have no branch vertex yet; anchor each at its lowest vertex.
  for (int v = 0; v < n; ++v) {
    bool untouched = j.degree(v) == 2 && !edge_done[j.incident(v).lowest()];
    if (untouched) {
      s.is_branch[v] = true;
      threads_from(v);
    }
  }

  // Mapping order: highest degree first, then vertices with most threads to
  // already ordered ones.
  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (s.is_branch[v]) branch.push_back(v);
  std::vector<bool> placed(n, false);
  while (s.order.size() < branch.size()) {
    int best = -1;
    int best_links = -1;
    for (int v : branch) {
      if (placed[v]) continue;
      int links = 0;
      for (const Thread& t : s.threads)
        if ((t.a == v && t.b != v && placed[t.b]) || (t.b == v && t.a != v && placed[t.a])) ++links;
      auto key = std::make_tuple(links, j.degree(v), -v);
      if (best < 0 || key > std::make_tuple(best_links, j.degree(best), -best)) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    s.order.push_back(best);
  }
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < s.order.size(); ++i) pos[s.order[i]] = static_cast<int>(i);
  s.ready.assign(s.order.size(), {});
  for (std::size_t t = 0; t < s.threads.size(); ++t)
    s.ready[std::max(pos[s.threads[t].a], pos[s.threads[t].b])].push_back(static_cast<int>(t));
  return s;
}

namespace {

struct BudgetExceeded {};

class Search {
 public:
  Search(const Graph& host, const PatternShape& shape, const ThreadSearchOptions& options)
      : host_(host), shape_(shape), opt_(options) {
    const Graph& j = shape.pattern;
    image_.assign(j.order(), -1);
    paths_.assign(shape.threads.size(), {});
    lengthenable_.assign(shape.threads.size(), true);
    if (opt_.rule.stretchable != nullptr) {
      for (std::size_t t = 0; t < shape.threads.size(); ++t) {
        bool any = false;
        for (int e : shape.threads[t].edges) any = any || opt_.rule.stretchable->test(e);
        lengthenable_[t] = any;
      }
    }
    if (auto c = bipartition(host)) {
      host_bipartite_ = true;
      color_ = *c;
    }
  }

  SearchStatus run(ThreadEmbedding& out) {
    try {
      if (!place(0)) return SearchStatus::absent;
    } catch (const BudgetExceeded&) {
      return SearchStatus::unknown;
    }
    out.image = image_;
    out.paths = paths_;
    return SearchStatus::found;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > opt_.node_budget) throw BudgetExceeded{};
  }

  bool candidate_ok(int b, int v) const {
    const Graph& j = shape_.pattern;
    int need = j.degree(b);
    int have = host_.degree(v);
    if (opt_.spanning ? have != need : have < need) return false;
    if (!host_bipartite_) return true;
    for (const Thread& t : shape_.threads) {
      int other = t.a == b ? t.b : (t.b == b ? t.a : -1);
      if (other < 0 || other == b || image_[other] < 0) continue;
      bool differ = color_[v] != color_[image_[other]];
      if (differ != (t.length() % 2 == 1)) return false;
    }
    return true;
  }

  bool place(std::size_t step) {
    if (step == shape_.order.size()) return finish();
    int b = shape_.order[step];
    for (int v = 0; v < host_.order(); ++v) {
      if (used_ >> v & 1U) continue;
      if (!candidate_ok(b, v)) continue;
      tick();
      image_[b] = v;
      used_ |= vertex_bit(v);
      if (route(step, 0)) return true;
      used_ &= ~vertex_bit(v);
      image_[b] = -1;
    }
    return false;
  }

  bool route(std::size_t step, std::size_t k) {
    const auto& ready = shape_.ready[step];
    if (k == ready.size()) return place(step + 1);
    int t = ready[k];
    const Thread& th = shape_.threads[t];
    int x = image_[th.a];
    int y = image_[th.b];
    paths_[t].assign(1, x);
    bool ok = extend(step, k, t, x, y, 0);
    if (!ok) paths_[t].clear();
    return ok;
  }

  bool extend(std::size_t step, std::size_t k, int t, int v, int y, int len) {
    tick();
    const int need = shape_.threads[t].length();
    const bool stretch = lengthenable_[t];
    VertexMask nb = host_.neighbors(v);
    if ((nb >> y & 1U) && len + 1 >= need && (len + 1 - need) % 2 == 0 && (len + 1 == need || stretch)) {
      // A loop needs at least 3 edges, which need >= 3 guarantees.
      paths_[t].push_back(y);
      if (route(step, k + 1)) return true;
      paths_[t].pop_back();
    }
    if (!stretch && len + 1 >= need) return false;
    VertexMask next = nb & ~used_ & host_.all_vertices();
    while (next != 0) {
      int w = std::countr_zero(next);
      next &= next - 1;
      if (opt_.spanning && host_.degree(w) != 2) continue;
      used_ |= vertex_bit(w);
      paths_[t].push_back(w);
      if (extend(step, k, t, w, y, len + 1)) return true;
      paths_[t].pop_back();
      used_ &= ~vertex_bit(w);
    }
    return false;
  }

  bool finish() {
    if (opt_.spanning) {
      if (used_ != host_.all_vertices()) return false;
      int edges = 0;
      for (const auto& p : paths_) edges += static_cast<int>(p.size()) - 1;
      if (edges != host_.size()) return false;
    }
    if (opt_.rule.marked.any()) {
      for (std::size_t t = 0; t < paths_.size(); ++t)
        if (!split_thread(host_, shape_.threads[t], paths_[t], opt_.rule)) return false;
    }
    if (!opt_.require_conformal) return true;
    VertexMask rest = host_.all_vertices() & ~used_;
    if (std::popcount(rest) % 2 != 0) return false;
    return is_matchable(host_, rest);
  }

  const Graph& host_;
  const PatternShape& shape_;
  const ThreadSearchOptions& opt_;
  std::vector<int> image_;
  std::vector<std::vector<int>> paths_;
  std::vector<bool> lengthenable_;
  VertexMask used_ = 0;
  bool host_bipartite_ = false;
  Coloring color_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchStatus search_threads(const Graph& host, const PatternShape& shape,
                            const ThreadSearchOptions& options, ThreadEmbedding& out,
                            std::uint64_t* nodes_used) {
  const Graph& j = shape.pattern;
  auto finish = [&](SearchStatus s, std::uint64_t nodes) {
    if (nodes_used != nullptr) *nodes_used = nodes;
    return s;
  };
  if (j.order() > host.order() || j.size() > host.size()) return finish(SearchStatus::absent, 0);
  if (options.spanning && host.size() - host.order() != j.size() - j.order())
    return finish(SearchStatus::absent, 0);
  if (!shape.bipartite && is_bipartite(host)) return finish(SearchStatus::absent, 0);
  // Degree feasibility: enough host vertices of each large degree.
  {
    std::vector<int> need(kMaxVertices + 1, 0);
    std::vector<int> have(kMaxVertices + 1, 0);
    for (int v : shape.order) ++need[j.degree(v)];
    for (int v = 0; v < host.order(); ++v) ++have[host.degree(v)];
    int need_acc = 0;
    int have_acc = 0;
    for (int d = kMaxVertices; d >= 3; --d) {
      need_acc += need[d];
      have_acc += have[d];
      if (need_acc > have_acc) return finish(SearchStatus::absent, 0);
      if (options.spanning && need[d] != have[d]) return finish(SearchStatus::absent, 0);
    }
  }
  Search search(host, shape, options);
  SearchStatus s = search.run(out);
  return finish(s, search.nodes());
}

std::optional<std::vector<int>> split_thread(const Graph& host, const Thread& thread,
                                             const std::vector<int>& path, const SplitRule& rule) {
  const int edges = thread.length();
  const int steps = static_cast<int>(path.size()) - 1;
  auto stretchable = [&](int i) {
    return rule.stretchable == nullptr || rule.stretchable->test(thread.edges[i]);
  };
  auto marked_ok = [&](int i) { return rule.marked_ok != nullptr && rule.marked_ok->test(thread.edges[i]); };
  std::vector<bool> marked_step(steps, false);
  for (int p = 0; p < steps; ++p) marked_step[p] = rule.marked.test(host.edge_index(path[p], path[p + 1]));
  auto segment_ok = [&](int i, int p, int len) {
    if (len > 1 && !stretchable(i)) return false;
    if (marked_ok(i)) return true;
    for (int q = p; q < p + len; ++q)
      if (marked_step[q]) return false;
    return true;
  };
  // reach[i][p]: edges i.. can cover steps p..end.
  std::vector<std::vector<bool>> reach(edges + 1, std::vector<bool>(steps + 1, false));
  reach[edges][steps] = true;
  for (int i = edges - 1; i >= 0; --i)
    for (int p = 0; p <= steps; ++p)
      for (int len = 1; p + len <= steps && !reach[i][p]; len += 2)
        if (reach[i + 1][p + len] && segment_ok(i, p, len)) reach[i][p] = true;
  if (!reach[0][0]) return std::nullopt;
  std::vector<int> out;
  int p = 0;
  for (int i = 0; i < edges; ++i) {
    int best = -1;
    for (int len = 1; p + len <= steps; len += 2)
      if (reach[i + 1][p + len] && segment_ok(i, p, len)) best = len;
    out.push_back(best);
    p += best;
  }
  return out;
}

EdgePaths expand_threads(const Graph& host, const PatternShape& shape,
                         const ThreadEmbedding& emb, const SplitRule& rule) {
  const Graph& j = shape.pattern;
  EdgePaths out;
  out.vertex_map.assign(j.order(), -1);
  out.edge_paths.assign(j.size(), {});
  for (int v = 0; v < j.order(); ++v)
    if (shape.is_branch[v]) out.vertex_map[v] = emb.image[v];
  for (std::size_t t = 0; t < shape.threads.size(); ++t) {
    const Thread& th = shape.threads[t];
    const std::vector<int>& path = emb.paths[t];
    auto lengths = split_thread(host, th, path, rule);
    if (!lengths) throw std::logic_error("embedded thread admits no split");
    int pos = 0;
    for (int i = 0; i < th.length(); ++i) {
      int len = (*lengths)[i];
      std::vector<int> seg(path.begin() + pos, path.begin() + pos + len + 1);
      pos += len;
      int pu = th.vertices[i];
      int pv = th.vertices[i + 1];
      out.vertex_map[pu] = seg.front();
      out.vertex_map[pv] = seg.back();
      int e = th.edges[i];
      if (j.edge(e).u != pu) std::reverse(seg.begin(), seg.end());
      out.edge_paths[e] = std::move(seg);
    }
  }
  return out;
}

}  // namespace forcing_lab::detail
