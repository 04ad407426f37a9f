// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "forcing_lab/cycles.hpp"
#include "forcing_lab/matching.hpp"

namespace forcing_lab {

struct HittingInstance {
  EdgeMask universe;
  std::vector<EdgeMask> targets;
};

/// Minimum subset of the universe meeting every target; among minimum sets the
/// lexicographically least. Throws PreconditionError when a target has no
/// element in the universe.
EdgeMask min_hitting_set(const HittingInstance& inst);

/// Edge set and its size, as returned by the forcing numbers.
struct Witnessed {
  int value = 0;
  EdgeMask witness;
};

/// S meets every conformal cycle. Throws GraphError if S is not within E(G),
/// PreconditionError if G is not matchable.
bool is_global_forcing_set(const Graph& g, const EdgeMask& s);
Witnessed global_forcing_number(const Graph& g);

/// S meets every M-alternating cycle. Throws PreconditionError if M is not
/// perfect or S meets M.
bool is_anti_forcing_set(const Graph& g, const Matching& m, const EdgeMask& s);
Witnessed anti_forcing_number(const Graph& g, const Matching& m);

struct MaxAntiForcing {
  int value = 0;
  Matching matching;  // first attaining matching in enumeration order
  EdgeMask witness;
};

/// Af(G) over all perfect matchings; throws CapExceeded beyond `matching_cap`.
MaxAntiForcing max_anti_forcing_number(const Graph& g,
                                       std::size_t matching_cap = kDefaultMatchingCap);

struct CompatibleSet {
  int value = 0;
  std::vector<Cycle> cycles;
};

/// Largest set of M-alternating cycles that pairwise share only M-edges.
CompatibleSet compatible_alternating_number(const Graph& g, const Matching& m);

struct ForcingOptions {
  std::size_t matching_cap = kDefaultMatchingCap;
  std::size_t cycle_cap = kDefaultCycleCap;
  bool with_c_prime = false;
};

struct MatchingEntry {
  Matching matching;
  int af = 0;
  EdgeMask af_witness;
  std::optional<int> c_prime;
};

struct ForcingReport {
  int gf = 0;
  EdgeMask gf_witness;
  std::vector<MatchingEntry> per_matching;  // enumeration order
  int Af = 0;
  Matching Af_matching;
  EdgeMask Af_witness;
};

/// gf, af for every perfect matching, and Af, sharing one cycle enumeration.
/// Throws PreconditionError if G is not matchable.
ForcingReport forcing_report(const Graph& g, const ForcingOptions& options = {});

/// gf(G) and Af(G) only.
std::pair<int, int> gf_and_Af(const Graph& g, const ForcingOptions& options = {});

}  // namespace forcing_lab
