#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cluedit/cotree.hpp"
#include "cluedit/graph.hpp"

namespace cluedit {

// Expression over labeled graphs with labels 0..k-1 (1-based in the text
// format).  Leaf introduces one vertex; Join takes the disjoint union of
// its children and adds every edge from a left vertex with label i to a
// right vertex with label i' for (i, i') in pairs; Relabel maps labels
// pointwise.  Nodes are stored children-before-parent, so a forward scan of
// the node array is bottom-up.
struct NlcExpression {
  enum class Kind : std::uint8_t { Leaf, Join, Relabel };
  struct Node {
    Kind kind;
    int label = -1;                             // Leaf: initial label
    int leaf_index = -1;                        // Leaf: vertex id (in-order)
    std::vector<std::pair<int, int>> pairs;     // Join: sorted, deduplicated
    std::vector<int> relabel;                   // Relabel: image per label
    int left = -1, right = -1;                  // children
  };
  int k = 1;
  std::vector<Node> nodes;
  int root = -1;
  int leaf_count = 0;
};

struct LabeledGraph {
  Graph graph;
  std::vector<int> label;  // 0..k-1 per vertex
};

// Text format: header line "k <INT>", then
//   expr  := (v INT) | (x pairs expr expr) | (r pairs expr)
//   pairs := ( { (INT INT) } )
// Labels are 1-based in the text.  Relabel pairs are (from, to); labels not
// listed map to themselves; listing a source twice is an error.  Throws
// ParseError with 1-based line/column.
NlcExpression parse_expression(const std::string& text);

LabeledGraph eval_expression(const NlcExpression& e);

// k x p matrix counting, per (label, cluster) cell, the vertices of one
// side that carry that label and sit in that cluster.
struct CountMatrix {
  int k = 0, p = 0;
  std::vector<int> cells;  // row-major

  CountMatrix() = default;
  CountMatrix(int k, int p) : k(k), p(p), cells(static_cast<size_t>(k) * p, 0) {}
  int& at(int i, int j) { return cells[static_cast<size_t>(i) * p + j]; }
  int at(int i, int j) const { return cells[static_cast<size_t>(i) * p + j]; }
  long long row_sum(int i) const;
  long long col_sum(int j) const;
  bool operator==(const CountMatrix&) const = default;
};

// Exact number of edits between the two sides of a join when the sides are
// clustered according to mv and mw (same column = same cluster): insertions
// for same-cluster cross pairs the join does not connect, deletions for
// connected cross pairs in different clusters.
long long h_cost(const CountMatrix& mv, const CountMatrix& mw,
                 const std::vector<std::pair<int, int>>& pairs);

struct NlcSolveStats {
  std::vector<size_t> states_per_node;
};

// Minimum p-clustering cost via the matrix DP over the expression.  With
// exact_p the root must use all p clusters (nullopt iff p > n); otherwise
// empty clusters are allowed and the result has at most p clusters.
std::optional<Solution> solve_p_cluster(const NlcExpression& e, int p,
                                        bool exact_p,
                                        NlcSolveStats* stats = nullptr);

// All matrices with prescribed row sums, in row-major order with each row
// running from (c,0,..,0) down to (0,..,0,c).
class WellDefinedEnumerator {
 public:
  WellDefinedEnumerator(std::vector<int> label_counts, int p);
  bool next(CountMatrix& out);

 private:
  bool advance_row(int i);
  std::vector<int> counts_;
  int p_;
  CountMatrix current_;
  bool started_ = false;
  bool done_ = false;
};

// 1-label expression equivalent to a cotree: union nodes become empty
// joins, join nodes become total joins.  vertex_of_leaf maps expression
// vertex ids (in-order leaf positions) back to the cotree's vertex ids.
struct CotreeExpression {
  NlcExpression expr;
  std::vector<int> vertex_of_leaf;
};

CotreeExpression cotree_to_expression(const Cotree& t);

}  // namespace cluedit
