#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluedit/graph.hpp"
#include "cluedit/oracle.hpp"

namespace cluedit {

struct PackingInstance {
  std::vector<long long> items;  // positive sizes
  long long capacity = 0;        // per-bin capacity b
  int bins = 0;                  // bin count k
  long long total() const;
};

// Packing file format: line "k b", then one line of space-separated item
// sizes (may be empty).  Throws ParseError.
PackingInstance parse_packing(const std::string& text);

// Reduction to an instance whose items must fill every bin exactly.
// TriviallyNo: some item exceeds b or the items exceed total capacity.
// AlwaysPackable: the items fit so loosely the original is a guaranteed
// yes (first-fit leaves no stranded item when the total is at most a tenth
// of the capacity).  Otherwise the result is a Perfect instance: k bumped
// to even with one b-sized item added if needed, then unit items pad the
// total to exactly k*b.
enum class PackingReduction { Perfect, AlwaysPackable, TriviallyNo };
struct ToPerfectResult {
  PackingReduction kind;
  PackingInstance instance;  // meaningful when kind == Perfect
};
ToPerfectResult to_perfect(const PackingInstance& inst);

// Exhaustive search with memoization on (next item, sorted residual
// capacities).  perfect requires every bin filled exactly.  Guarded: throws
// BudgetExceeded unless total <= 64 or the item count is <= 12.  The
// witness lists original item indices per bin.
struct PackingDecision {
  bool packable = false;
  std::vector<std::vector<int>> bins;
};
PackingDecision decide_packing(const PackingInstance& inst, bool perfect);

// Graph whose optimal clusterings decide perfect packability: k anchor
// cliques of size h, one clique per item, and every anchor-item pair fully
// joined.  Splitting the items across the anchors costs
//   (k-1)*a*h + (k*b^2 - s)/2        (a = sum of items, s = sum of squares)
// exactly when the split is a perfect packing, and strictly more otherwise
// once h > a^2.  Vertices: anchors first, then item blocks.
struct GadgetOutput {
  Graph graph;
  long long t = 0;  // target cost above
  long long h = 0;
  std::vector<std::pair<int, int>> b_blocks;  // (first vertex, size)
  std::vector<std::pair<int, int>> a_blocks;
};
GadgetOutput build_gadget(const PackingInstance& inst, long long h);

long long gadget_target_cost(const PackingInstance& inst, long long h);

// Builds the gadget, recovers its block structure via closed-neighborhood
// classes, and brute-forces every optimal clustering of the quotient.
// Individual checks are reported rather than enforced so sweeps over h can
// observe where the separation starts to hold.
struct GadgetReport {
  long long h = 0;
  long long t = 0;
  long long c_star = 0;
  bool packing_decision = false;
  int optimal_cluster_count = 0;            // of the first optimum
  int quotient_parts = 0;
  std::vector<long long> cluster_sizes;     // of the first optimum
  bool quotient_matches_blocks = false;
  bool check_cluster_count = false;         // every optimum has k clusters
  bool check_cost_lower_bound = false;      // c* >= t
  bool check_equality_iff_packing = false;  // c* == t  <=>  perfect packing
  bool check_equal_sizes = false;           // at c* == t all clusters h + b
  bool all_pass() const {
    return quotient_matches_blocks && check_cluster_count &&
           check_cost_lower_bound && check_equality_iff_packing &&
           check_equal_sizes;
  }
};
GadgetReport verify_gadget(const PackingInstance& inst, long long h,
                           unsigned long long budget = kOracleBudget);

}  // namespace cluedit
