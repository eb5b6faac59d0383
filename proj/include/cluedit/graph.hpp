#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cluedit {

using Edge = std::pair<int, int>;  // always normalized to first < second

// Undirected simple graph on dense vertex ids 0..n-1, stored as a symmetric
// bit matrix (one row of 64-bit words per vertex).  Row words are exposed so
// the recognition and clustering code can do whole-row set operations.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  long long m() const { return edge_count_; }
  int row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<size_t>(v) * words_;
  }

  std::vector<Edge> edges() const;        // sorted lexicographically
  std::vector<int> neighbors(int v) const;
  long long non_edge_count() const {
    return static_cast<long long>(n_) * (n_ - 1) / 2 - edge_count_;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  long long edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A clustering is a partition of the vertex set; clusters hold sorted vertex
// ids and the list is sorted by smallest member (see canonical_clustering).
using Clustering = std::vector<std::vector<int>>;

struct Solution {
  long long cost = 0;
  Clustering clustering;
};

struct EditSet {
  std::vector<Edge> insertions;  // non-edges inside clusters
  std::vector<Edge> deletions;   // edges between clusters
};

// Partition of V into classes of identical closed neighborhoods.  Each class
// induces a clique, and any two classes are either fully joined or fully
// non-adjacent, so the quotient graph together with the class sizes carries
// all cost information.
struct CriticalCliquePartition {
  std::vector<std::vector<int>> parts;  // sorted ids, parts sorted by min id
  std::vector<long long> weights;       // weights[i] == parts[i].size()
  Graph quotient;                       // parts adjacent iff fully joined
};

bool is_cluster_graph(const Graph& g);
bool is_valid_clustering(const Graph& g, const Clustering& c);

// Both throw std::invalid_argument unless c is a partition of V(g) into
// nonempty clusters.
EditSet edit_set(const Graph& g, const Clustering& c);
long long cost_of_clustering(const Graph& g, const Clustering& c);

// Applies insertions and deletions; throws std::invalid_argument if an
// insertion already exists or a deletion is absent.
Graph apply_edit_set(const Graph& g, const EditSet& edits);

CriticalCliquePartition critical_cliques(const Graph& g);

// Cost, in the original graph, of the clustering obtained by expanding a
// partition of the quotient parts.  part_partition partitions 0..parts-1.
long long weighted_cost(const CriticalCliquePartition& q,
                        const Clustering& part_partition);

Clustering canonical_clustering(Clustering c);
// block_of[v] = cluster index of v; empty blocks are dropped.
Clustering clustering_from_assignment(const std::vector<int>& block_of);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace cluedit
