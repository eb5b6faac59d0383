#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "cluedit/graph.hpp"

// Small helpers shared by the test binaries.  The subgraph scans here are
// deliberately written as plain quadruple loops so they share no code with
// the library's certificate search.

namespace testutil {

inline cluedit::Graph graph_from_edges(int n,
                                       const std::vector<cluedit::Edge>& edges) {
  cluedit::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline cluedit::Graph path_graph(int n) {
  cluedit::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline cluedit::Graph cycle_graph(int n) {
  cluedit::Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline cluedit::Graph complete_graph(int n) {
  cluedit::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Center 0, leaves 1..n-1.
inline cluedit::Graph star_graph(int n) {
  cluedit::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

inline bool has_induced_p4(const cluedit::Graph& g) {
  int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d)
            continue;
          if (a > d) continue;  // each path shows up once per direction
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
              !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d))
            return true;
        }
  return false;
}

inline bool has_induced_c4(const cluedit::Graph& g) {
  int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d)
            continue;
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
              g.has_edge(d, a) && !g.has_edge(a, c) && !g.has_edge(b, d))
            return true;
        }
  return false;
}

inline bool is_induced_p4(const cluedit::Graph& g, const std::array<int, 4>& v) {
  auto [a, b, c, d] = v;
  return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
         !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d);
}

inline bool is_induced_c4(const cluedit::Graph& g, const std::array<int, 4>& v) {
  auto [a, b, c, d] = v;
  return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
         g.has_edge(d, a) && !g.has_edge(a, c) && !g.has_edge(b, d);
}

// Pair-by-pair edit count, independent of the library's edit_set machinery.
inline long long naive_cost(const cluedit::Graph& g,
                            const cluedit::Clustering& clusters) {
  std::vector<int> block(g.n(), -1);
  for (size_t i = 0; i < clusters.size(); ++i)
    for (int v : clusters[i]) block[v] = static_cast<int>(i);
  long long cost = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if ((block[u] == block[v]) != g.has_edge(u, v)) ++cost;
  return cost;
}

// Decodes a graph on n vertices from the bits of mask, pair (u, v) with
// u < v at bit position u * n + v.  Lets tests sweep every graph of a size.
inline cluedit::Graph graph_from_mask(int n, unsigned mask) {
  cluedit::Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) g.add_edge(u, v);
  return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Induced subgraph on the given (sorted) vertex set, relabeled 0..k-1.
inline cluedit::Graph induced_subgraph(const cluedit::Graph& g,
                                       const std::vector<int>& verts) {
  cluedit::Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

}  // namespace testutil
