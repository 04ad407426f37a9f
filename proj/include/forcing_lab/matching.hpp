// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "forcing_lab/graph.hpp"

namespace forcing_lab {

/// A matching is a set of edge indices of its host graph.
using Matching = EdgeMask;

inline constexpr std::size_t kDefaultMatchingCap = 1'000'000;

/// Maximum-cardinality matching of G[within] (Edmonds' blossom algorithm).
Matching maximum_matching(const Graph& g, VertexMask within);
inline Matching maximum_matching(const Graph& g) { return maximum_matching(g, g.all_vertices()); }

/// True iff G[within] has a perfect matching. The empty vertex set is matchable.
bool is_matchable(const Graph& g, VertexMask within);
inline bool is_matchable(const Graph& g) { return is_matchable(g, g.all_vertices()); }

bool is_matching(const Graph& g, const EdgeMask& m);
bool is_perfect_matching(const Graph& g, const EdgeMask& m);

/// Visits every perfect matching of G[within] once. Branches on the lowest
/// uncovered vertex, partners in increasing order. Stops early when `visit`
/// returns false.
void for_each_perfect_matching(const Graph& g, VertexMask within,
                               const std::function<bool(const Matching&)>& visit);
inline void for_each_perfect_matching(const Graph& g,
                                      const std::function<bool(const Matching&)>& visit) {
  for_each_perfect_matching(g, g.all_vertices(), visit);
}

/// All perfect matchings in enumeration order; throws CapExceeded beyond `cap`.
std::vector<Matching> perfect_matchings(const Graph& g, std::size_t cap = kDefaultMatchingCap);

std::uint64_t count_perfect_matchings(const Graph& g);

/// Edges lying in at least one perfect matching. Throws PreconditionError if G is not matchable.
EdgeMask allowed_edges(const Graph& g);

/// Connected, and every edge is allowed.
bool is_matching_covered(const Graph& g);

struct ElementaryDecomposition {
  std::vector<VertexMask> vertices;  // per component, ordered by lowest vertex
  std::vector<EdgeMask> edges;       // per component
  EdgeMask forbidden;
};

/// Components of the allowed-edge subgraph. Throws PreconditionError if G is not matchable.
ElementaryDecomposition elementary_components(const Graph& g);

}  // namespace forcing_lab
