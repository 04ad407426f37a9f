// SPDX-License-Identifier: Apache-2.0
//
// Thin wrappers over nauty kept out of the public headers (nauty's macros
// and typedefs would leak otherwise).

#pragma once

#include <functional>
#include <string>

#include "forcing_lab/graph.hpp"

namespace forcing_lab::detail {

inline constexpr int kNautyMaxOrder = 32;

struct GengFlags {
  bool connected = false;
  bool bipartite = false;
  int min_degree = 0;
};

/// All graphs of order n up to isomorphism, in geng order; `visit` returns
/// false to stop. Not reentrant.
void for_each_geng_graph(int n, const GengFlags& flags, const std::function<bool(const Graph&)>& visit);

/// Canonical adjacency rows for n <= kNautyMaxOrder. Not reentrant.
std::string nauty_certificate(const Graph& g, std::vector<int>* labelling = nullptr);

}  // namespace forcing_lab::detail
