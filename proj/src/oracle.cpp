#include "cluedit/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cluedit/errors.hpp"

namespace cluedit {

PartitionEnumerator::PartitionEnumerator(int n, int max_blocks)
    : n_(n), cap_(max_blocks < 0 ? n : std::min(max_blocks, n)),
      rgs_(n, 0), maxv_(n, 0) {
  if (n_ < 0) throw std::invalid_argument("negative element count");
  if (n_ > 0 && cap_ == 0) done_ = true;  // no partition into 0 blocks
}

bool PartitionEnumerator::next(std::vector<int>& block_of) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    block_of = rgs_;
    blocks_ = n_ > 0 ? 1 : 0;
    if (n_ == 0) done_ = true;
    return true;
  }
  // Advance the restricted growth string: find the rightmost position that
  // can still grow (value below both predecessor max + 1 and block cap).
  int i = n_ - 1;
  for (; i >= 1; --i) {
    if (rgs_[i] <= maxv_[i - 1] && rgs_[i] + 1 <= cap_ - 1) break;
  }
  if (i < 1) {
    done_ = true;
    return false;
  }
  ++rgs_[i];
  maxv_[i] = std::max(maxv_[i - 1], rgs_[i]);
  for (int j = i + 1; j < n_; ++j) {
    rgs_[j] = 0;
    maxv_[j] = maxv_[j - 1];
  }
  block_of = rgs_;
  blocks_ = maxv_[n_ - 1] + 1;
  return true;
}

unsigned long long bell_number_capped(int n, unsigned long long cap) {
  // Bell triangle with saturation.
  std::vector<unsigned long long> row = {1};
  auto sat_add = [&](unsigned long long a, unsigned long long b) {
    if (a > cap || b > cap || a + b > cap) return cap + 1;
    return a + b;
  };
  for (int i = 1; i <= n; ++i) {
    std::vector<unsigned long long> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[j] = sat_add(next[j - 1], row[j - 1]);
    row = std::move(next);
    if (row[0] > cap && i < n) return cap + 1;
  }
  return std::min(row[0], cap + 1);
}

unsigned long long partition_count_capped(int n, int max_blocks,
                                          unsigned long long cap) {
  if (max_blocks < 0 || max_blocks >= n) return bell_number_capped(n, cap);
  // Stirling numbers of the second kind, summed over 1..max_blocks.
  std::vector<std::vector<unsigned long long>> s(
      n + 1, std::vector<unsigned long long>(max_blocks + 1, 0));
  s[0][0] = 1;
  auto sat = [&](unsigned long long v) { return v > cap ? cap + 1 : v; };
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= max_blocks; ++k) {
      unsigned long long a = s[i - 1][k];
      unsigned long long b = s[i - 1][k - 1];
      unsigned long long v = (a > cap / (k ? k : 1)) ? cap + 1 : a * k;
      s[i][k] = sat(v > cap ? cap + 1 : v + b);
    }
  unsigned long long total = 0;
  for (int k = 0; k <= max_blocks; ++k) total = sat(total + s[n][k]);
  return total;
}

namespace {

long long score_assignment(const Graph& g, const std::vector<int>& block_of) {
  long long cost = 0;
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool same = block_of[u] == block_of[v];
      if (same != g.has_edge(u, v)) ++cost;
    }
  return cost;
}

long long score_weighted(const CriticalCliquePartition& q,
                         const std::vector<int>& block_of) {
  long long cost = 0;
  const int parts = static_cast<int>(q.parts.size());
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j) {
      bool same = block_of[i] == block_of[j];
      if (same != q.quotient.has_edge(i, j))
        cost += q.weights[i] * q.weights[j];
    }
  return cost;
}

void check_budget(int units, int max_blocks, unsigned long long limit,
                  const char* what) {
  unsigned long long count = partition_count_capped(units, max_blocks, limit);
  if (count > limit)
    throw BudgetExceeded(std::string(what) + ": partition count exceeds budget",
                         units, count);
}

Clustering expand_parts(const CriticalCliquePartition& q,
                        const std::vector<int>& block_of) {
  int blocks = 0;
  for (int b : block_of) blocks = std::max(blocks, b + 1);
  Clustering out(blocks);
  for (size_t i = 0; i < block_of.size(); ++i)
    out[block_of[i]].insert(out[block_of[i]].end(), q.parts[i].begin(),
                            q.parts[i].end());
  return canonical_clustering(std::move(out));
}

}  // namespace

Solution brute_force_optimal(const Graph& g, unsigned long long limit,
                             bool contract) {
  if (!contract) {
    check_budget(g.n(), -1, limit, "uncontracted search");
    PartitionEnumerator en(g.n());
    std::vector<int> block_of;
    long long best = kCostInf;
    std::vector<int> best_assign;
    while (en.next(block_of)) {
      long long c = score_assignment(g, block_of);
      if (c < best) {
        best = c;
        best_assign = block_of;
      }
    }
    if (g.n() == 0) return {0, {}};
    return {best, clustering_from_assignment(best_assign)};
  }

  CriticalCliquePartition q = critical_cliques(g);
  const int parts = static_cast<int>(q.parts.size());
  check_budget(parts, -1, limit, "quotient search");
  PartitionEnumerator en(parts);
  std::vector<int> block_of;
  long long best = kCostInf;
  std::vector<int> best_assign;
  while (en.next(block_of)) {
    long long c = score_weighted(q, block_of);
    if (c < best) {
      best = c;
      best_assign = block_of;
    }
  }
  if (parts == 0) return {0, {}};
  return {best, expand_parts(q, best_assign)};
}

std::optional<Solution> brute_force_p(const Graph& g, int p, bool exact_p,
                                      unsigned long long limit) {
  if (p < 1) throw std::invalid_argument("cluster count must be positive");
  const int n = g.n();
  if (exact_p && p > n) return std::nullopt;
  if (n == 0) return Solution{0, {}};
  check_budget(n, std::min(p, n), limit, "p-restricted search");
  PartitionEnumerator en(n, std::min(p, n));
  std::vector<int> block_of;
  long long best = kCostInf;
  std::vector<int> best_assign;
  while (en.next(block_of)) {
    if (exact_p && en.block_count() != p) continue;
    long long c = score_assignment(g, block_of);
    if (c < best) {
      best = c;
      best_assign = block_of;
    }
  }
  if (best >= kCostInf) return std::nullopt;  // unreachable for valid p
  return Solution{best, clustering_from_assignment(best_assign)};
}

std::vector<long long> brute_force_profile(const Graph& g,
                                           unsigned long long limit) {
  const int n = g.n();
  check_budget(n, -1, limit, "profile search");
  std::vector<long long> best(n + 1, kCostInf);
  if (n == 0) {
    best[0] = 0;
    return best;
  }
  PartitionEnumerator en(n);
  std::vector<int> block_of;
  while (en.next(block_of)) {
    long long c = score_assignment(g, block_of);
    best[en.block_count()] = std::min(best[en.block_count()], c);
  }
  return best;
}

std::vector<Clustering> enumerate_all_optimal(const Graph& g,
                                              unsigned long long limit) {
  const int n = g.n();
  check_budget(n, -1, limit, "optimal enumeration");
  if (n == 0) return {Clustering{}};
  PartitionEnumerator en(n);
  std::vector<int> block_of;
  long long best = kCostInf;
  std::vector<Clustering> out;
  while (en.next(block_of)) {
    long long c = score_assignment(g, block_of);
    if (c < best) {
      best = c;
      out.clear();
    }
    if (c == best) out.push_back(clustering_from_assignment(block_of));
  }
  return out;
}

}  // namespace cluedit
