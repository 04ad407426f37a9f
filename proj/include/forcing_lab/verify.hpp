// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forcing_lab/families.hpp"
#include "forcing_lab/forcing.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/minors.hpp"

namespace forcing_lab {

struct TheoremState;

// --- pools ------------------------------------------------------------------------

inline constexpr int kDefaultExhaustiveBound = 10;

/// `exhaustive:n=N[,min=K],filter=a+b` or `random:n=N,p=P,count=C,seed=S[,nmin=K][,filter=...]`.
/// Filters: bipartite, nonbipartite, connected, matchable, mc, bn.
struct PoolSpec {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  int n_max = 0;
  int n_min = 1;
  double p = 0.5;
  int count = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> filters;
  std::string text;  // canonical rendering
};

/// Throws ParseError on malformed specs.
PoolSpec parse_pool_spec(std::string_view text);
bool passes_filters(const Graph& g, const std::vector<std::string>& filters);

/// Streams pool members in a deterministic order (by order n, then generator
/// order). `visit` returns false to stop. Returns the number of members visited.
/// Throws PreconditionError when an exhaustive spec exceeds `bound`.
std::uint64_t for_each_pool_member(const PoolSpec& spec, const std::function<bool(const Graph&)>& visit,
                                   int bound = kDefaultExhaustiveBound);

struct GraphPool {
  PoolSpec spec;
  std::vector<Graph> members;
};

GraphPool build_pool(const PoolSpec& spec, int bound = kDefaultExhaustiveBound);
GraphPool build_pool(std::string_view spec, int bound = kDefaultExhaustiveBound);

// --- strong uniformity ------------------------------------------------------------

enum class Verdict { yes, no, unknown };
std::string_view to_string(Verdict v);

/// All matching covered subgraphs H of g with g - V(H) matchable, including
/// K2's and g itself when matching covered; deduplicated by edge set, in
/// discovery order. Throws CapExceeded beyond `cap` subgraphs.
std::vector<EdgeMask> matching_covered_conformal_subgraphs(const Graph& g, std::size_t cap = 1'000'000);

struct UniformityResult {
  Verdict verdict = Verdict::yes;
  std::optional<EdgeMask> counterexample;  // edges of the host
  int gf = 0;                              // of the counterexample
  int Af = 0;
  std::string note;
};

/// Memoized oracle; the cache is keyed by canonical form of matching covered
/// subgraphs and survives across calls.
class UniformityOracle {
 public:
  explicit UniformityOracle(ForcingOptions caps = {});
  ~UniformityOracle();
  UniformityOracle(const UniformityOracle&) = delete;
  UniformityOracle& operator=(const UniformityOracle&) = delete;

  /// Throws PreconditionError unless g is matchable.
  UniformityResult check(const Graph& g);
  std::size_t cache_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

UniformityResult is_strongly_uniform(const Graph& g, const ForcingOptions& caps = {});

/// Brute force over all edge subsets (feasible for small edge counts):
/// every conformal matchable subgraph H has gf(H) = Af(H).
Verdict strongly_uniform_by_subsets(const Graph& g, int max_edges = 18);

// --- reports ----------------------------------------------------------------------

struct VerificationReport {
  std::string property;
  std::string pool;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t unknown = 0;
  std::uint64_t skipped = 0;  // members outside the property's hypothesis
  std::optional<Graph> counterexample;
  std::string detail;  // computed values for the counterexample

  bool ok() const { return failed == 0 && unknown == 0; }
};

/// One line: `<property> <pool> passed=.. failed=.. unknown=.. skipped=..` plus detail.
std::string format_report(const VerificationReport& r);

struct TableRow {
  std::string name;
  std::string family;
  int expected_gf = 0;
  int expected_af = 0;
  int gf = 0;
  int Af = 0;
  bool ok = false;  // values match and the family relation holds
};

struct TableReport {
  std::vector<TableRow> rows;
  std::uint64_t failed = 0;
};

/// Recomputes gf and Af for every entry (no load-time firewall assumed) and
/// checks gf = Af + 1 on A and D entries and gf = Af on G entries.
TableReport verify_tables(const Catalog& catalog, const ForcingOptions& caps = {});

struct TheoremContext {
  const Catalog* catalog = nullptr;
  ForcingOptions caps;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int exhaustive_bound = kDefaultExhaustiveBound;
  std::string artifact_dir;  // failures are written here when nonempty
  int jobs = 1;              // worker threads; reports do not depend on it
  std::shared_ptr<TheoremState> state;  // caches shared across members
};

/// Property names accepted by verify_theorem.
const std::vector<std::string>& theorem_properties();

/// Evaluates one property on one pool member; true when it holds or the
/// member is outside the hypothesis (see `skipped`).
struct PropertyOutcome {
  Verdict verdict = Verdict::yes;
  bool skipped = false;
  std::string detail;
};
PropertyOutcome check_property(std::string_view name, const Graph& g, TheoremContext& ctx);

/// Throws PreconditionError for an unknown property name.
VerificationReport verify_theorem(std::string_view name, const PoolSpec& pool, TheoremContext& ctx);
VerificationReport verify_theorem(std::string_view name, const std::vector<Graph>& members,
                                  std::string_view pool_label, TheoremContext& ctx);

/// Re-runs a stored artifact (graph file with `# property <name>` header).
VerificationReport replay_artifact(const std::string& path, TheoremContext& ctx);

}  // namespace forcing_lab
