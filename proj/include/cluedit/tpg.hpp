#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cluedit/cotree.hpp"
#include "cluedit/graph.hpp"

namespace cluedit {

struct ForbiddenSubgraph {
  enum class Kind { P4, C4 } kind;
  std::array<int, 4> vertices;  // path order for P4, cycle order for C4
};

// Bottom-up table over the binarized cotree.  cost[u][k-1] is the cheapest
// known way to turn the subgraph below u into a cluster graph whose largest
// cluster has exactly k vertices, for k in 1..n.  rule records which branch
// of the recurrence was taken (1: keep left's largest, 2: keep right's
// largest, 3: merge a j / k-j pair across the children), split the j used.
struct TpgDpTable {
  static constexpr long long kInf = 1LL << 62;
  Cotree tree;  // binary; node ids index the rows
  std::vector<std::vector<long long>> cost;
  std::vector<std::vector<std::uint8_t>> rule;
  std::vector<std::vector<int>> split;
};

struct TpgTableResult {
  std::optional<TpgDpTable> table;
  std::optional<ForbiddenSubgraph> witness;  // set when the graph is out of class
};

struct TpgResult {
  std::optional<Solution> solution;
  std::optional<ForbiddenSubgraph> witness;
};

TpgTableResult dp_table(const Graph& g);
TpgResult solve_tpg(const Graph& g);

// Clustering realized by the table entry (node, k); requires a finite cost
// there.  Its largest cluster has exactly k vertices and its cost in the
// induced subgraph equals cost[node][k-1].
Clustering traceback(const TpgDpTable& table, int node, int k);

Solution solve_from_table(const TpgDpTable& table);

// Tab-separated dump: node, k, value, rule, j (value "inf" where unreached).
std::string dp_table_tsv(const TpgDpTable& table);

}  // namespace cluedit
