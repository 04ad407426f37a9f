// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forcing_lab/cycles.hpp"
#include "forcing_lab/graph.hpp"
#include "forcing_lab/surgery.hpp"

namespace forcing_lab {

// --- catalog ------------------------------------------------------------------

/// Named fundamental graph with its declared invariants. `family` is one of
/// A, D, G0, G1, G2, G3. Edge sets hold edge indices of `graph`.
struct CatalogEntry {
  std::string name;
  std::string family;
  Graph graph;
  int expected_gf = 0;
  int expected_af = 0;
  std::vector<EdgeMask> replaceable_sets;
  std::vector<EdgeMask> strong_replaceable_sets;
  std::optional<std::string> base;
  int line = 0;  // line of the `[graph ...]` header
};

using Catalog = std::vector<CatalogEntry>;

/// Grammar only. Throws ParseError with the offending line.
Catalog parse_catalog(std::string_view text);
/// Grammar plus the invariant firewall: computed gf and Af must equal the
/// declared values. Throws ParseError naming the entry on mismatch.
Catalog load_catalog(std::string_view text);
/// Reads a file; throws std::runtime_error if it cannot be opened.
std::string read_text_file(const std::string& path);

/// Entries of the given families (e.g. {"A"} or {"A", "D"}), in file order.
std::vector<const CatalogEntry*> select_family(const Catalog& catalog,
                                               const std::vector<std::string>& families);
const CatalogEntry* find_entry(const Catalog& catalog, std::string_view name);

// --- Hamilton cycles and chords -------------------------------------------------

std::optional<Cycle> find_hamilton_cycle(const Graph& g);
/// Visits each Hamilton cycle once; stops when `visit` returns false.
/// Returns false if more than `cap` cycles would be visited.
bool for_each_hamilton_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit,
                             std::size_t cap = 1'000'000);

enum class ChordRole { bicolorable, black, white };
enum class PairRelation { adjacent, parallel, crossed, strongly_crossed, other };

std::string_view to_string(ChordRole r);
std::string_view to_string(PairRelation r);

struct Chord {
  Edge edge;
  ChordRole role = ChordRole::bicolorable;
};

struct ChordPair {
  int first = 0;  // indices into ChordProfile::chords
  int second = 0;
  PairRelation relation = PairRelation::other;
};

/// Chords of a Hamilton cycle, colored by position along the cycle (its first
/// vertex black).
struct ChordProfile {
  Cycle hamilton_cycle;
  std::vector<Chord> chords;
  std::vector<ChordPair> pairs;
  int n_black = 0;
  int n_white = 0;
};

/// Throws PreconditionError unless c is a Hamilton cycle of g.
ChordProfile chord_profile(const Graph& g, const Cycle& c);

// --- classification -------------------------------------------------------------

enum class Family { B0, B1, B2, B3, G0, G1, G2, G3, none, unknown };
std::string_view to_string(Family f);

struct FamilyLabel {
  Family family = Family::none;
  std::optional<ChordProfile> profile;
  std::string base;                         // catalog entry for G families
  int replaceable_set = -1;                 // index into the entry's replaceable sets
  int strong_set = -1;                      // index into the entry's strong sets (G3)
  std::vector<std::vector<int>> gadgets;    // host threads x..y removed before recognition (G3)
  std::vector<int> reduced_to_host;         // vertex map of the graph after gadget removal
  std::optional<BisubdivisionMap> map;      // base -> graph after gadget removal
  std::string note;                         // why the answer is none or unknown
};

/// B0..B3 or none. Throws PreconditionError unless g is bipartite, matching
/// covered and has at least 4 vertices. Gives `unknown` beyond `cap` Hamilton cycles.
FamilyLabel classify_bipartite(const Graph& g, std::size_t cap = 1'000'000);

/// G0..G3 or none, against the G-family entries of `catalog`. Throws
/// PreconditionError unless g is nonbipartite, matching covered and BN.
FamilyLabel classify_bn(const Graph& g, const Catalog& catalog);

/// Re-validates a G-family label: rebuilds the recognized graph from the base.
bool validate_bn_label(const Graph& g, const Catalog& catalog, const FamilyLabel& label);

}  // namespace forcing_lab
