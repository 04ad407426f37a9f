// SPDX-License-Identifier: Apache-2.0
//
// Embeds a bisubdivision of a pattern graph into a host. The pattern is cut
// into threads: maximal paths whose inner vertices have degree 2, running
// between branch vertices (degree other than 2, or the lowest vertex of a
// cycle component). A thread of length L may map to any host path of length
// L + 2t, t >= 0.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forcing_lab/graph.hpp"

namespace forcing_lab::detail {

struct Thread {
  int a = 0;
  int b = 0;                  // equal to a for a cycle hanging on one branch vertex
  std::vector<int> vertices;  // pattern vertices from a to b
  std::vector<int> edges;     // pattern edge indices from a to b
  int length() const { return static_cast<int>(edges.size()); }
};

struct PatternShape {
  Graph pattern;
  std::vector<bool> is_branch;
  std::vector<int> order;               // branch vertices in mapping order
  std::vector<Thread> threads;
  std::vector<std::vector<int>> ready;  // per step: threads whose ends are mapped at that step
  bool bipartite = true;
};

PatternShape analyze_pattern(const Graph& j);

/// Which pattern edges a thread path may stretch over.
struct SplitRule {
  const EdgeMask* stretchable = nullptr;  // pattern edges allowed to be lengthened; nullptr = all
  const EdgeMask* marked_ok = nullptr;    // pattern edges whose path may contain marked host edges
  EdgeMask marked;                        // marked host edges
};

/// Odd segment lengths, one per thread edge, covering `path`; earlier edges
/// take as much length as possible. Absent if the rule admits no split.
std::optional<std::vector<int>> split_thread(const Graph& host, const Thread& thread,
                                             const std::vector<int>& path, const SplitRule& rule);

struct ThreadSearchOptions {
  bool spanning = false;  // host must be exactly a bisubdivision of the pattern
  SplitRule rule;
  bool require_conformal = true;
  std::uint64_t node_budget = 10'000'000;
};

enum class SearchStatus { found, absent, unknown };

struct ThreadEmbedding {
  std::vector<int> image;               // branch vertex -> host vertex, -1 elsewhere
  std::vector<std::vector<int>> paths;  // per thread: host vertices from image(a) to image(b)
};

SearchStatus search_threads(const Graph& host, const PatternShape& shape,
                            const ThreadSearchOptions& options, ThreadEmbedding& out,
                            std::uint64_t* nodes_used = nullptr);

struct EdgePaths {
  VertexMap vertex_map;                      // every pattern vertex -> host vertex
  std::vector<std::vector<int>> edge_paths;  // per pattern edge: host path from image(u) to image(v)
};

/// Distributes each thread path over its pattern edges with split_thread.
EdgePaths expand_threads(const Graph& host, const PatternShape& shape,
                         const ThreadEmbedding& emb, const SplitRule& rule);

}  // namespace forcing_lab::detail
