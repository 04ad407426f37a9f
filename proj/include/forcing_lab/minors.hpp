// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "forcing_lab/families.hpp"
#include "forcing_lab/graph.hpp"

namespace forcing_lab {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// A bisubdivision of the pattern placed as a conformal subgraph of the host.
struct MinorEmbedding {
  VertexMap branch_map;                    // pattern vertex -> host vertex
  std::vector<std::vector<int>> path_map;  // per pattern edge: host path from image(u) to image(v)
  EdgeMask union_edges;
  VertexMask union_vertices = 0;
};

enum class MinorStatus { found, absent, unknown };
std::string_view to_string(MinorStatus s);

struct MinorSearch {
  MinorStatus status = MinorStatus::absent;
  std::optional<MinorEmbedding> embedding;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a conformal bisubdivision of j in g. `unknown`
/// means the node budget ran out before a decision.
MinorSearch find_conformal_minor(const Graph& g, const Graph& j,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

/// Independent re-check: odd internally disjoint paths realizing j, and
/// g minus the union's vertices matchable.
bool validate_embedding(const Graph& g, const Graph& j, const MinorEmbedding& e);

struct ScreenHit {
  std::string name;
  MinorStatus status = MinorStatus::found;  // found or unknown
  std::optional<MinorEmbedding> embedding;
};

/// Every entry found (or left undecided) as a conformal minor of g, in catalog
/// order. `jobs` worker threads share the entries.
std::vector<ScreenHit> screen_catalog(const Graph& g, const std::vector<const CatalogEntry*>& entries,
                                      std::uint64_t node_budget = kDefaultNodeBudget, int jobs = 1);

/// Exact yes/no test "some pattern is a conformal minor" for many hosts.
/// A matching covered host either is a spanning bisubdivision of a pattern or
/// keeps a minor after deleting some edge; results are memoized per
/// elementary component up to isomorphism.
class MinorLattice {
 public:
  explicit MinorLattice(std::vector<const CatalogEntry*> patterns);

  /// Throws PreconditionError unless g is matchable.
  bool contains_any(const Graph& g);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  bool component_has(const Graph& k);

  std::vector<const CatalogEntry*> patterns_;
  int min_order_ = 0;
  int min_excess_ = 0;  // least |E| - |V| over patterns
  std::unordered_map<std::string, bool> cache_;
};

}  // namespace forcing_lab
