// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcing_lab/edge_mask.hpp"
#include "forcing_lab/errors.hpp"

namespace forcing_lab {

/// Undirected edge with 0-based endpoints, stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 (printed as 1..n).
///
/// Edges are kept sorted lexicographically; an edge's position in that order
/// is its index, which is what `EdgeMask` bits refer to.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws GraphError on loops, duplicates, or endpoints out of range.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  VertexMask neighbors(int v) const { return adj_[v]; }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1U; }
  int degree(int v) const;
  /// Index of edge {a,b}, or -1 when absent.
  int edge_index(int a, int b) const { return index_[a * n_ + b]; }
  int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

  VertexMask all_vertices() const;
  EdgeMask all_edges() const { return EdgeMask::first_n(size()); }
  /// Edges incident to v.
  EdgeMask incident(int v) const;
  /// Vertices covered by the edges in `mask`.
  VertexMask endpoints(const EdgeMask& mask) const;
  /// Edges with both ends in `vertices`.
  EdgeMask induced_edges(VertexMask vertices) const;

  EdgeMask mask_of(const std::vector<Edge>& edges) const;
  std::vector<Edge> edges_of(const EdgeMask& mask) const;

  /// Spanning subgraph with only the edges in `mask` (same vertex labels).
  Graph spanning_subgraph(const EdgeMask& mask) const;
  /// Graph with an extra edge appended; throws on duplicates.
  Graph with_edge(const Edge& e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
  std::vector<std::int16_t> index_;
};

/// A subgraph pulled out of a host, relabeled to 0..k-1.
struct Extracted {
  Graph graph;
  std::vector<int> to_host;    // local vertex -> host vertex
  std::vector<int> edge_host;  // local edge index -> host edge index
};

/// The subgraph formed by `edges` and the vertices in `vertices` (plus edge endpoints).
Extracted extract(const Graph& host, const EdgeMask& edges, VertexMask vertices = 0);

enum class Color : std::uint8_t { black, white };

/// Vertex colors, indexed by vertex.
using Coloring = std::vector<Color>;

/// Injective map source vertex -> target vertex, indexed by source vertex.
using VertexMap = std::vector<int>;

// --- text formats -----------------------------------------------------------

/// Parses the `p n m` / `e u v` graph file format.
Graph parse_graph(std::string_view text);
/// Canonical graph file text (edges sorted, 1-based labels).
std::string serialize_graph(const Graph& g);

/// Parses "1-2 2-3" or "1-2,2-3" (1-based) into edges of an n-vertex graph.
std::vector<Edge> parse_edge_list(std::string_view text, int n);
/// Convenience: graph from a 1-based "u-v" list.
Graph graph_from_string(int n, std::string_view edges);

std::string format_edge(const Edge& e);
std::string format_edges(const std::vector<Edge>& edges, std::string_view sep = " ");
std::string format_edges(const Graph& g, const EdgeMask& mask, std::string_view sep = " ");

// --- elementary structure ---------------------------------------------------

/// Proper 2-coloring with the lowest vertex of every component black, if bipartite.
std::optional<Coloring> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertex sets of the connected components, ordered by lowest vertex.
std::vector<VertexMask> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// |E| - |V| + 1; throws PreconditionError for disconnected input.
int cyclomatic_number(const Graph& g);

/// An isomorphism g -> h as a VertexMap, or nullopt.
std::optional<VertexMap> isomorphic(const Graph& g, const Graph& h);

/// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const VertexMap& perm);

/// Canonical labelling key: equal exactly for isomorphic graphs. Exact for up
/// to 32 vertices; larger graphs fall back to their labelled edge list.
std::string canonical_key(const Graph& g);
/// The canonically relabelled graph (32 vertices at most).
Graph canonical_form(const Graph& g);

// --- named constructions used across tests and tools -------------------------

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// Two vertices joined by internally disjoint paths with the given lengths.
Graph theta_graph(const std::vector<int>& lengths);
/// Vertex-disjoint union; vertices of h follow those of g.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace forcing_lab
