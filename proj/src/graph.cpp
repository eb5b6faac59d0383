#include "cluedit/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cluedit {

Graph::Graph(int n)
    : n_(n), words_((n + 63) / 64),
      bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0) {
  if (n < 0) throw std::invalid_argument("graph size must be nonnegative");
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("vertex id out of range: " +
                                std::to_string(u) + "," + std::to_string(v));
  if (u == v) throw std::invalid_argument("self loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (has_edge(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.n();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (int u = 0; u < n; ++u)
        if (!seen[u] && g.has_edge(v, u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

bool is_cluster_graph(const Graph& g) {
  // Every component must be a clique: each vertex's row, restricted to its
  // component, has to cover the whole component minus the vertex itself.
  const int words = g.row_words();
  for (const auto& comp : connected_components(g)) {
    std::vector<std::uint64_t> mask(words, 0);
    for (int v : comp) mask[v >> 6] |= 1ull << (v & 63);
    for (int v : comp) {
      for (int w = 0; w < words; ++w) {
        std::uint64_t expect = mask[w];
        if ((v >> 6) == w) expect &= ~(1ull << (v & 63));
        if ((g.row(v)[w] & mask[w]) != expect) return false;
      }
    }
  }
  return true;
}

namespace {

// Returns block_of (vertex -> cluster index) or throws if c is not a
// partition of V(g) into nonempty clusters.
std::vector<int> assignment_of(const Graph& g, const Clustering& c) {
  std::vector<int> block_of(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].empty()) throw std::invalid_argument("empty cluster");
    for (int v : c[i]) {
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("cluster member out of range");
      if (block_of[v] != -1)
        throw std::invalid_argument("vertex appears in two clusters");
      block_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (block_of[v] == -1)
      throw std::invalid_argument("vertex missing from clustering");
  return block_of;
}

}  // namespace

bool is_valid_clustering(const Graph& g, const Clustering& c) {
  try {
    assignment_of(g, c);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

EditSet edit_set(const Graph& g, const Clustering& c) {
  std::vector<int> block_of = assignment_of(g, c);
  EditSet out;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      bool same = block_of[u] == block_of[v];
      bool edge = g.has_edge(u, v);
      if (same && !edge) out.insertions.emplace_back(u, v);
      if (!same && edge) out.deletions.emplace_back(u, v);
    }
  return out;
}

long long cost_of_clustering(const Graph& g, const Clustering& c) {
  std::vector<int> block_of = assignment_of(g, c);
  long long cost = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      bool same = block_of[u] == block_of[v];
      if (same != g.has_edge(u, v)) ++cost;
    }
  return cost;
}

Graph apply_edit_set(const Graph& g, const EditSet& edits) {
  Graph out = g;
  for (const auto& [u, v] : edits.insertions) {
    if (out.has_edge(u, v))
      throw std::invalid_argument("insertion of an existing edge");
    out.add_edge(u, v);
  }
  for (const auto& [u, v] : edits.deletions) {
    if (!out.has_edge(u, v))
      throw std::invalid_argument("deletion of a missing edge");
    out.remove_edge(u, v);
  }
  return out;
}

CriticalCliquePartition critical_cliques(const Graph& g) {
  const int n = g.n();
  const int words = g.row_words();
  // Group vertices by closed neighborhood.  Vertices in one group are
  // pairwise adjacent automatically (v in N[v] = N[u] forces the edge uv).
  std::map<std::vector<std::uint64_t>, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) {
    std::vector<std::uint64_t> key(g.row(v), g.row(v) + words);
    key[v >> 6] |= 1ull << (v & 63);
    groups[key].push_back(v);
  }
  CriticalCliquePartition out;
  for (auto& [key, members] : groups) out.parts.push_back(members);
  std::sort(out.parts.begin(), out.parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const int parts = static_cast<int>(out.parts.size());
  out.weights.reserve(parts);
  for (const auto& part : out.parts)
    out.weights.push_back(static_cast<long long>(part.size()));
  out.quotient = Graph(parts);
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j)
      if (g.has_edge(out.parts[i].front(), out.parts[j].front()))
        out.quotient.add_edge(i, j);
  return out;
}

long long weighted_cost(const CriticalCliquePartition& q,
                        const Clustering& part_partition) {
  const int parts = static_cast<int>(q.parts.size());
  std::vector<int> block_of(parts, -1);
  for (size_t i = 0; i < part_partition.size(); ++i) {
    if (part_partition[i].empty()) throw std::invalid_argument("empty block");
    for (int p : part_partition[i]) {
      if (p < 0 || p >= parts)
        throw std::invalid_argument("part index out of range");
      if (block_of[p] != -1)
        throw std::invalid_argument("part appears in two blocks");
      block_of[p] = static_cast<int>(i);
    }
  }
  for (int p = 0; p < parts; ++p)
    if (block_of[p] == -1)
      throw std::invalid_argument("part missing from partition");

  long long cost = 0;
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j) {
      bool same = block_of[i] == block_of[j];
      bool edge = q.quotient.has_edge(i, j);
      if (same && !edge) cost += q.weights[i] * q.weights[j];
      if (!same && edge) cost += q.weights[i] * q.weights[j];
    }
  return cost;
}

Clustering canonical_clustering(Clustering c) {
  for (auto& cluster : c) std::sort(cluster.begin(), cluster.end());
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) {
    return a.front() < b.front();
  });
  return c;
}

Clustering clustering_from_assignment(const std::vector<int>& block_of) {
  int blocks = 0;
  for (int b : block_of) blocks = std::max(blocks, b + 1);
  Clustering raw(blocks);
  for (size_t v = 0; v < block_of.size(); ++v)
    raw[block_of[v]].push_back(static_cast<int>(v));
  Clustering out;
  for (auto& cluster : raw)
    if (!cluster.empty()) out.push_back(std::move(cluster));
  return canonical_clustering(std::move(out));
}

}  // namespace cluedit
