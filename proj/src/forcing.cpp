// SPDX-License-Identifier: Apache-2.0

#include "forcing_lab/forcing.hpp"

#include <algorithm>

namespace forcing_lab {

namespace {

// Branch and bound over a reduced target family.
class HittingSolver {
 public:
  HittingSolver(const EdgeMask& universe, std::vector<EdgeMask> targets) {
    for (EdgeMask& t : targets) t &= universe;
    std::sort(targets.begin(), targets.end(),
              [](const EdgeMask& a, const EdgeMask& b) { return a.count() < b.count(); });
    // Drop duplicates and supersets; they never change the hitting sets.
    for (const EdgeMask& t : targets) {
      bool dominated = false;
      for (const EdgeMask& kept : targets_)
        if (kept.is_subset_of(t)) {
          dominated = true;
          break;
        }
      if (!dominated) targets_.push_back(t);
    }
  }

  bool trivial() const { return targets_.empty(); }

  int greedy_bound() const {
    EdgeMask chosen;
    int size = 0;
    for (;;) {
      std::vector<int> hits(kMaxEdges, 0);
      bool any = false;
      for (const EdgeMask& t : targets_)
        if (!t.intersects(chosen)) {
          any = true;
          t.for_each([&](int e) { ++hits[e]; });
        }
      if (!any) return size;
      int best = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());
      chosen.set(best);
      ++size;
    }
  }

  /// Smallest extension size of `chosen` avoiding `banned`, if at most `limit`.
  std::optional<int> extend(const EdgeMask& chosen, const EdgeMask& banned, int limit) {
    best_ = limit + 1;
    stop_at_ = -1;
    search(chosen, banned, 0);
    return best_ <= limit ? std::optional<int>(best_) : std::nullopt;
  }

  /// True iff some extension of `chosen` of size at most `limit` avoids `banned`.
  bool feasible(const EdgeMask& chosen, const EdgeMask& banned, int limit) {
    best_ = limit + 1;
    stop_at_ = limit;
    search(chosen, banned, 0);
    return best_ <= limit;
  }

 private:
  void search(const EdgeMask& chosen, const EdgeMask& banned, int size) {
    if (stop_at_ >= 0 && best_ <= stop_at_) return;
    const EdgeMask* pick = nullptr;
    int pick_count = kMaxEdges + 1;
    EdgeMask packed;
    int lower = 0;
    for (const EdgeMask& t : targets_) {
      if (t.intersects(chosen)) continue;
      EdgeMask avail = t - banned;
      int c = avail.count();
      if (c == 0) return;
      if (c < pick_count) {
        pick_count = c;
        pick = &t;
      }
      if (!avail.intersects(packed)) {
        packed |= avail;
        ++lower;
      }
    }
    if (pick == nullptr) {
      best_ = std::min(best_, size);
      return;
    }
    if (size + lower >= best_) return;
    EdgeMask avail = *pick - banned;
    EdgeMask tried = banned;
    avail.for_each([&](int e) {
      if (size + 1 >= best_) return;
      EdgeMask next = chosen;
      next.set(e);
      search(next, tried, size + 1);
      tried.set(e);
    });
  }

  std::vector<EdgeMask> targets_;
  int best_ = 0;
  int stop_at_ = -1;
};

}  // namespace

EdgeMask min_hitting_set(const HittingInstance& inst) {
  for (const EdgeMask& t : inst.targets)
    if (!t.intersects(inst.universe)) throw PreconditionError("a target cannot be hit (infeasible instance)");
  HittingSolver solver(inst.universe, inst.targets);
  if (solver.trivial()) return {};
  int k = *solver.extend(EdgeMask{}, EdgeMask{}, solver.greedy_bound());

  // Fix elements in increasing index order, keeping an optimal completion possible.
  EdgeMask chosen;
  EdgeMask banned = EdgeMask::first_n(kMaxEdges) - inst.universe;
  for (int step = 0; step < k; ++step) {
    bool placed = false;
    for (int e = 0; e < kMaxEdges && !placed; ++e) {
      if (banned.test(e) || chosen.test(e)) continue;
      EdgeMask trial = chosen;
      trial.set(e);
      if (solver.feasible(trial, banned, k - step - 1)) {
        chosen = trial;
        placed = true;
      } else {
        banned.set(e);
      }
    }
    if (!placed) throw std::logic_error("hitting set reconstruction failed");
  }
  return chosen;
}

namespace {

std::vector<EdgeMask> edge_sets(const std::vector<Cycle>& cycles) {
  std::vector<EdgeMask> out;
  out.reserve(cycles.size());
  for (const Cycle& c : cycles) out.push_back(c.edges);
  return out;
}

void require_perfect(const Graph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) throw PreconditionError("not a perfect matching of the graph");
}

Witnessed af_from_cycles(const Graph& g, const Matching& m, const std::vector<Cycle>& even_cycles) {
  HittingInstance inst{g.all_edges() - m, {}};
  for (const Cycle& c : even_cycles)
    if (is_alternating(c, m)) inst.targets.push_back(c.edges - m);
  EdgeMask s = min_hitting_set(inst);
  return {s.count(), s};
}

}  // namespace

bool is_global_forcing_set(const Graph& g, const EdgeMask& s) {
  if (!s.is_subset_of(g.all_edges())) throw GraphError("edge set is not within E(G)");
  for (const Cycle& c : conformal_cycles(g))
    if (!c.edges.intersects(s)) return false;
  return true;
}

Witnessed global_forcing_number(const Graph& g) {
  EdgeMask s = min_hitting_set({g.all_edges(), edge_sets(conformal_cycles(g))});
  return {s.count(), s};
}

bool is_anti_forcing_set(const Graph& g, const Matching& m, const EdgeMask& s) {
  require_perfect(g, m);
  if (!s.is_subset_of(g.all_edges())) throw GraphError("edge set is not within E(G)");
  if (s.intersects(m)) throw PreconditionError("an anti-forcing set must avoid the matching");
  for (const Cycle& c : alternating_cycles(g, m))
    if (!c.edges.intersects(s)) return false;
  return true;
}

Witnessed anti_forcing_number(const Graph& g, const Matching& m) {
  require_perfect(g, m);
  return af_from_cycles(g, m, alternating_cycles(g, m));
}

MaxAntiForcing max_anti_forcing_number(const Graph& g, std::size_t matching_cap) {
  ForcingOptions options;
  options.matching_cap = matching_cap;
  ForcingReport r = forcing_report(g, options);
  return {r.Af, r.Af_matching, r.Af_witness};
}

namespace {

// Maximum clique by simple branch and bound on bit rows.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::vector<bool>> adj) : adj_(std::move(adj)) {}

  std::vector<int> run() {
    std::vector<int> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<int>& current, const std::vector<int>& candidates) {
    if (candidates.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best_.size()) return;
      int v = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (adj_[v][candidates[j]]) next.push_back(candidates[j]);
      current.push_back(v);
      expand(current, next);
      current.pop_back();
    }
  }

  std::vector<std::vector<bool>> adj_;
  std::vector<int> best_;
};

}  // namespace

CompatibleSet compatible_alternating_number(const Graph& g, const Matching& m) {
  std::vector<Cycle> cycles = alternating_cycles(g, m);
  const std::size_t k = cycles.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      adj[i][j] = adj[j][i] = ((cycles[i].edges & cycles[j].edges) - m).none();
  CompatibleSet out;
  for (int i : CliqueSearch(std::move(adj)).run()) out.cycles.push_back(cycles[i]);
  out.value = static_cast<int>(out.cycles.size());
  return out;
}

ForcingReport forcing_report(const Graph& g, const ForcingOptions& options) {
  if (!is_matchable(g)) throw PreconditionError("graph has no perfect matching");
  std::vector<Cycle> even;
  bool exceeded = false;
  for_each_cycle(g, [&](const Cycle& c) {
    if (c.is_odd()) return true;
    if (even.size() >= options.cycle_cap) {
      exceeded = true;
      return false;
    }
    even.push_back(c);
    return true;
  });
  if (exceeded) throw CapExceeded("more than " + std::to_string(options.cycle_cap) + " cycles");

  ForcingReport r;
  HittingInstance gf_inst{g.all_edges(), {}};
  for (const Cycle& c : even)
    if (is_conformal(g, c.vertex_set)) gf_inst.targets.push_back(c.edges);
  r.gf_witness = min_hitting_set(gf_inst);
  r.gf = r.gf_witness.count();

  bool first = true;
  for (const Matching& m : perfect_matchings(g, options.matching_cap)) {
    MatchingEntry entry;
    entry.matching = m;
    Witnessed af = af_from_cycles(g, m, even);
    entry.af = af.value;
    entry.af_witness = af.witness;
    if (options.with_c_prime) entry.c_prime = compatible_alternating_number(g, m).value;
    if (first || entry.af > r.Af) {
      r.Af = entry.af;
      r.Af_matching = m;
      r.Af_witness = entry.af_witness;
      first = false;
    }
    r.per_matching.push_back(std::move(entry));
  }
  return r;
}

std::pair<int, int> gf_and_Af(const Graph& g, const ForcingOptions& options) {
  ForcingReport r = forcing_report(g, options);
  return {r.gf, r.Af};
}

}  // namespace forcing_lab
