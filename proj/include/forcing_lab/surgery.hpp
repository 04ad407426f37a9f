// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "forcing_lab/graph.hpp"
#include "forcing_lab/matching.hpp"

namespace forcing_lab {

/// Per-edge parameter: an odd path length for bisubdivision, k >= 0 for
/// quadrilateral subdivision.
struct SubdivisionPlan {
  std::map<Edge, int> entries;
};

/// Parses "u-v:p,u-v:p" (1-based) against g.
SubdivisionPlan parse_plan(const Graph& g, std::string_view text);

struct SurgeryResult {
  Graph graph;
  int original_order = 0;
  /// Original edge -> vertex path in the result, from e.u to e.v.
  std::map<Edge, std::vector<int>> replacement_paths;
  /// New vertex (original_order + i) -> originating edge.
  std::vector<Edge> origin;
};

/// Replaces each planned edge by a path of the planned odd length. New
/// vertices are numbered after the originals, edges taken in sorted order.
/// Throws GraphError for missing edges or even / non-positive lengths.
SurgeryResult bisubdivide(const Graph& g, const SubdivisionPlan& plan);

/// The perfect matching g(M): on each replacement path the odd-position edges
/// when the original edge is in M, the even-position edges otherwise.
/// Throws PreconditionError unless m is perfect in g.
Matching matching_bijection(const Graph& g, const SurgeryResult& r, const Matching& m);

/// Replaces each planned edge by a (4k+1)-path v0..v(4k+1) plus the chords
/// v(4i-3)v(4i), i = 1..k. Throws GraphError for missing edges or k < 0.
SurgeryResult quad_subdivide(const Graph& g, const SubdivisionPlan& plan);

/// The k = 1 case on one edge: u w1 w2 w3 w4 v plus w1w4.
SurgeryResult quad_gadget(const Graph& g, const Edge& e);

/// Witness that a host is a bisubdivision of a pattern.
struct BisubdivisionMap {
  VertexMap vertex_map;                      // pattern vertex -> host vertex
  std::vector<std::vector<int>> edge_paths;  // per pattern edge index: host path from image(u) to image(v)
};

/// Decides whether h is a bisubdivision of j in which only edges in
/// `constraint` (pattern edge indices) are subdivided, when given.
std::optional<BisubdivisionMap> recognize_bisubdivision(const Graph& h, const Graph& j,
                                                        const EdgeMask* constraint = nullptr);

/// Checks that `m` really exhibits h as a bisubdivision of j (with the constraint, if any).
bool validate_bisubdivision(const Graph& h, const Graph& j, const BisubdivisionMap& m,
                            const EdgeMask* constraint = nullptr);

struct EarDecomposition {
  Edge base;
  std::vector<std::vector<int>> ears;  // vertex sequences; only the ends lie in the earlier graph
};

/// Builds a bipartite ear decomposition in which every intermediate graph is a
/// matching covered conformal subgraph. Throws PreconditionError unless g is
/// bipartite and matching covered.
EarDecomposition bipartite_ear_decomposition(const Graph& g);

/// Re-checks every condition of a bipartite ear decomposition of g.
bool validate_ear_decomposition(const Graph& g, const EarDecomposition& d);

}  // namespace forcing_lab
