#pragma once

#include <optional>
#include <vector>

#include "cluedit/graph.hpp"

namespace cluedit {

inline constexpr unsigned long long kOracleBudget = 1'000'000;

// Set partitions of {0..n-1} in restricted-growth-string order.  With
// max_blocks >= 0 only partitions into at most that many blocks are
// produced.  n = 0 yields exactly one (empty) partition.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n, int max_blocks = -1);
  // Fills block_of (size n) with the next partition; false when done.
  bool next(std::vector<int>& block_of);
  int block_count() const { return blocks_; }

 private:
  int n_;
  int cap_;
  bool started_ = false;
  bool done_ = false;
  int blocks_ = 0;
  std::vector<int> rgs_;
  std::vector<int> maxv_;
};

// Saturating counts used for budget checks: results above cap come back as
// cap + 1.
unsigned long long bell_number_capped(int n, unsigned long long cap);
unsigned long long partition_count_capped(int n, int max_blocks,
                                          unsigned long long cap);

// Exact minimum over all clusterings.  The search runs on the critical
// clique quotient (any optimal clustering keeps each class whole, so the
// quotient search is lossless); contract = false forces the raw vertex
// enumeration and is there for consistency tests.  Throws BudgetExceeded
// when the partition count would pass limit.
Solution brute_force_optimal(const Graph& g,
                             unsigned long long limit = kOracleBudget,
                             bool contract = true);

// Exact minimum over clusterings with exactly (or, with exact_p = false, at
// most) p nonempty clusters.  Enumerates raw vertex partitions: classes of
// identical closed neighborhood may have to split when the cluster count is
// pinned (K2 with p = 2 already shows this), so no contraction here.
// Returns nullopt iff exact_p and p > n.
std::optional<Solution> brute_force_p(const Graph& g, int p, bool exact_p,
                                      unsigned long long limit = kOracleBudget);

// best[q] = minimum cost over clusterings with exactly q clusters, for
// q = 0..n (inf sentinel where no such clustering exists).  One sweep.
std::vector<long long> brute_force_profile(const Graph& g,
                                           unsigned long long limit = kOracleBudget);
inline constexpr long long kCostInf = 1LL << 62;

// Every optimal clustering, in enumeration order, without contraction.
std::vector<Clustering> enumerate_all_optimal(const Graph& g,
                                              unsigned long long limit = kOracleBudget);

}  // namespace cluedit
