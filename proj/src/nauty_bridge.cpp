// SPDX-License-Identifier: Apache-2.0

#include "nauty_bridge.hpp"

#include <csetjmp>
#include <cstdio>
#include <exception>
#include <utility>
#include <string>
#include <vector>

#include "nauty.h"

extern "C" int geng_main(int argc, char* argv[]);

namespace {

const std::function<bool(const forcing_lab::Graph&)>* g_visit = nullptr;
std::jmp_buf g_abort;
std::exception_ptr g_error;

}  // namespace

extern "C" void forcing_lab_geng_out(FILE*, graph* g, int n) {
  std::vector<forcing_lab::Edge> edges;
  for (int i = 0; i < n; ++i) {
    set* row = GRAPHROW(g, i, 1);
    for (int j = i + 1; j < n; ++j)
      if (ISELEMENT(row, j)) edges.emplace_back(i, j);
  }
  bool more = false;
  try {
    more = (*g_visit)(forcing_lab::Graph(n, std::move(edges)));
  } catch (...) {
    g_error = std::current_exception();
  }
  // geng keeps its state in statics and is re-initialized per run.
  if (!more) std::longjmp(g_abort, 1);
}

namespace forcing_lab::detail {

void for_each_geng_graph(int n, const GengFlags& flags, const std::function<bool(const Graph&)>& visit) {
  if (n < 1 || n > kNautyMaxOrder) throw PreconditionError("generator order out of range");
  std::string sw = "-q";
  if (flags.connected) sw += 'c';
  if (flags.bipartite) sw += 'b';
  std::string deg = "-d" + std::to_string(flags.min_degree);
  std::string order = std::to_string(n);
  std::vector<char*> argv{const_cast<char*>("geng"), sw.data(), deg.data(), order.data(), nullptr};
  g_visit = &visit;
  g_error = nullptr;
  if (setjmp(g_abort) == 0) geng_main(static_cast<int>(argv.size()) - 1, argv.data());
  g_visit = nullptr;
  if (g_error) std::rethrow_exception(std::exchange(g_error, nullptr));
}

std::string nauty_certificate(const Graph& gr, std::vector<int>* labelling) {
  const int n = gr.order();
  if (n > kNautyMaxOrder) throw PreconditionError("canonical labelling supports at most 32 vertices");
  std::string out(1, static_cast<char>(n));
  if (n == 0) return out;
  graph g[MAXN];
  graph cg[MAXN];
  int lab[MAXN];
  int ptn[MAXN];
  int orbits[MAXN];
  DEFAULTOPTIONS_GRAPH(options);
  options.getcanon = TRUE;
  statsblk stats;
  EMPTYGRAPH(g, 1, n);
  for (const Edge& e : gr.edges()) ADDONEEDGE(g, e.u, e.v, 1);
  densenauty(g, lab, ptn, orbits, &options, &stats, 1, n, cg);
  for (int i = 0; i < n; ++i) {
    setword w = cg[i];
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xFF));
  }
  if (labelling) labelling->assign(lab, lab + n);
  return out;
}

}  // namespace forcing_lab::detail

namespace forcing_lab {

std::string canonical_key(const Graph& g) {
  if (g.order() > detail::kNautyMaxOrder) return "L" + serialize_graph(g);
  return detail::nauty_certificate(g);
}

Graph canonical_form(const Graph& g) {
  std::vector<int> lab;
  detail::nauty_certificate(g, &lab);
  VertexMap perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[lab[i]] = i;
  return relabel(g, perm);
}

}  // namespace forcing_lab
