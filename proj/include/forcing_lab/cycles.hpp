// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "forcing_lab/graph.hpp"
#include "forcing_lab/matching.hpp"

namespace forcing_lab {

inline constexpr std::size_t kDefaultCycleCap = 10'000'000;

/// A simple cycle of a host graph. `vertices` is canonical: it starts at the
/// smallest vertex and its second entry is smaller than its last.
struct Cycle {
  std::vector<int> vertices;
  EdgeMask edges;
  VertexMask vertex_set = 0;

  int length() const { return static_cast<int>(vertices.size()); }
  bool is_odd() const { return vertices.size() % 2 == 1; }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices == b.vertices; }
  friend bool operator<(const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; }
};

/// Builds a cycle from a closed vertex sequence; throws GraphError unless it is a cycle of g.
Cycle make_cycle(const Graph& g, std::vector<int> vertices);
/// The cycle formed by `edges`; throws GraphError unless they form one cycle.
Cycle cycle_from_edges(const Graph& g, const EdgeMask& edges);
/// "1-2-3-1" style text.
std::string format_cycle(const Cycle& c);

/// Visits every simple cycle with length in [min_len, max_len] once, ordered by
/// smallest vertex and then by depth-first extension in increasing vertex order.
/// Stops when `visit` returns false.
void for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit,
                    int min_len = 3, int max_len = kMaxVertices);

/// All cycles; throws CapExceeded beyond `cap`.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// G - vertices is matchable.
bool is_conformal(const Graph& g, VertexMask vertices);
/// The subgraph with these edges (plus extra isolated vertices) is conformal.
/// Throws GraphError if an edge is not in g.
bool is_conformal_subgraph(const Graph& g, const std::vector<Edge>& edges, VertexMask extra = 0);

/// Even cycles C with G - V(C) matchable. Throws PreconditionError for non-matchable g.
std::vector<Cycle> conformal_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);
/// Same set, computed as the cycles that alternate with respect to some perfect matching.
std::vector<Cycle> conformal_cycles_via_matchings(const Graph& g,
                                                  std::size_t cap = kDefaultCycleCap);

bool is_alternating(const Cycle& c, const Matching& m);
/// Cycles alternating with respect to the perfect matching m; throws PreconditionError otherwise.
std::vector<Cycle> alternating_cycles(const Graph& g, const Matching& m,
                                      std::size_t cap = kDefaultCycleCap);

struct BicycleWitness {
  Cycle first;
  Cycle second;
  Matching remainder_matching;
};

struct BnResult {
  bool bn = true;
  std::optional<BicycleWitness> witness;
};

/// Searches for an odd conformal bicycle. Pairs are scanned by the length of
/// the longer cycle, then by enumeration order, so the witness is deterministic.
/// Throws PreconditionError for non-matchable g.
BnResult is_bn_graph(const Graph& g);

}  // namespace forcing_lab
