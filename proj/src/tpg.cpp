#include "cluedit/tpg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cluedit {

namespace {

constexpr long long kInf = TpgDpTable::kInf;

inline long long sat_add(long long a, long long b) {
  if (a >= kInf || b >= kInf) return kInf;
  return a + b;
}

}  // namespace

TpgTableResult dp_table(const Graph& g) {
  TpgTableResult result;
  CographResult rec = build_cotree(g);
  if (!rec.is_cograph()) {
    result.witness = ForbiddenSubgraph{ForbiddenSubgraph::Kind::P4, rec.p4};
    return result;
  }
  if (!is_trivially_perfect(*rec.cotree)) {
    auto c4 = c4_from_cotree(*rec.cotree);
    if (!c4) throw std::logic_error("C4 extraction failed on a non-TPG cotree");
    result.witness = ForbiddenSubgraph{ForbiddenSubgraph::Kind::C4, *c4};
    return result;
  }

  TpgDpTable table;
  table.tree = binarize(*rec.cotree);
  const Cotree& t = table.tree;
  const int n = g.n();
  const int nodes = t.size();
  table.cost.assign(nodes, std::vector<long long>(n, kInf));
  table.rule.assign(nodes, std::vector<std::uint8_t>(n, 0));
  table.split.assign(nodes, std::vector<int>(n, 0));

  // Preorder ids put children after their parent, so a reverse scan is a
  // valid bottom-up order.
  std::vector<long long> pm1(n), pm2(n);
  std::vector<int> pj1(n), pj2(n);
  for (int u = nodes - 1; u >= 0; --u) {
    const auto& node = t.node(u);
    if (node.leaf >= 0) {
      table.cost[u][0] = 0;
      continue;
    }
    const int c1 = node.children[0];
    const int c2 = node.children[1];
    const long long s1 = t.clade_size(c1);
    const long long s2 = t.clade_size(c2);
    const bool join = node.kind == CotreeKind::One;
    const long long cross = join ? s1 * s2 : 0;

    // Running prefix minima over each child's row, with the smallest
    // minimizing j kept for the traceback.
    for (int k = 0; k < n; ++k) {
      if (k == 0 || table.cost[c1][k] < pm1[k - 1]) {
        pm1[k] = table.cost[c1][k];
        pj1[k] = k + 1;
      } else {
        pm1[k] = pm1[k - 1];
        pj1[k] = pj1[k - 1];
      }
      if (k == 0 || table.cost[c2][k] < pm2[k - 1]) {
        pm2[k] = table.cost[c2][k];
        pj2[k] = k + 1;
      } else {
        pm2[k] = pm2[k - 1];
        pj2[k] = pj2[k - 1];
      }
    }

    for (int k = 1; k <= n; ++k) {
      // Largest cluster stays inside one child; the other child's clusters
      // may be grouped any way not exceeding k.  A join node then cuts
      // every edge between the two sides.
      long long best = sat_add(sat_add(table.cost[c1][k - 1], pm2[k - 1]), cross);
      std::uint8_t best_rule = 1;
      int best_j = pj2[k - 1];

      long long v2 = sat_add(sat_add(table.cost[c2][k - 1], pm1[k - 1]), cross);
      if (v2 < best) {
        best = v2;
        best_rule = 2;
        best_j = pj1[k - 1];
      }

      // Or the largest cluster is assembled from a size-j piece on the left
      // and a size-(k-j) piece on the right: a union node pays the j(k-j)
      // missing pairs, a join node cuts everything except those pairs.
      for (int j = 1; j < k; ++j) {
        long long base = sat_add(table.cost[c1][j - 1], table.cost[c2][k - j - 1]);
        if (base >= kInf) continue;
        long long extra = static_cast<long long>(j) * (k - j);
        long long v3 = join ? base + cross - extra : base + extra;
        if (v3 < best) {
          best = v3;
          best_rule = 3;
          best_j = j;
        }
      }

      table.cost[u][k - 1] = best;
      if (best < kInf) {
        table.rule[u][k - 1] = best_rule;
        table.split[u][k - 1] = best_j;
      }
    }
  }

  result.table = std::move(table);
  return result;
}

namespace {

struct PartialClustering {
  std::vector<std::vector<int>> clusters;
  int grown = -1;  // index of the cluster realizing the size-k bound
};

PartialClustering trace_rec(const TpgDpTable& table, int u, int k) {
  const Cotree& t = table.tree;
  if (table.cost[u][k - 1] >= kInf)
    throw std::invalid_argument("traceback from an unreachable entry");
  const auto& node = t.node(u);
  if (node.leaf >= 0) return {{{node.leaf}}, 0};

  const int c1 = node.children[0];
  const int c2 = node.children[1];
  const std::uint8_t rule = table.rule[u][k - 1];
  const int j = table.split[u][k - 1];

  if (rule == 1 || rule == 2) {
    PartialClustering big = trace_rec(table, rule == 1 ? c1 : c2, k);
    PartialClustering small = trace_rec(table, rule == 1 ? c2 : c1, j);
    for (auto& cluster : small.clusters)
      big.clusters.push_back(std::move(cluster));
    return big;
  }

  PartialClustering left = trace_rec(table, c1, j);
  PartialClustering right = trace_rec(table, c2, k - j);
  auto& merged = left.clusters[left.grown];
  auto& donor = right.clusters[right.grown];
  merged.insert(merged.end(), donor.begin(), donor.end());
  for (size_t i = 0; i < right.clusters.size(); ++i)
    if (static_cast<int>(i) != right.grown)
      left.clusters.push_back(std::move(right.clusters[i]));
  return left;
}

}  // namespace

Clustering traceback(const TpgDpTable& table, int node, int k) {
  return canonical_clustering(trace_rec(table, node, k).clusters);
}

Solution solve_from_table(const TpgDpTable& table) {
  if (table.tree.empty()) return {0, {}};
  const int n = table.tree.leaf_count();
  const int root = table.tree.root();
  long long best = kInf;
  int best_k = 0;
  for (int k = 1; k <= n; ++k)
    if (table.cost[root][k - 1] < best) {
      best = table.cost[root][k - 1];
      best_k = k;
    }
  return {best, traceback(table, root, best_k)};
}

TpgResult solve_tpg(const Graph& g) {
  TpgResult out;
  TpgTableResult tbl = dp_table(g);
  if (!tbl.table) {
    out.witness = tbl.witness;
    return out;
  }
  out.solution = solve_from_table(*tbl.table);
  return out;
}

std::string dp_table_tsv(const TpgDpTable& table) {
  std::ostringstream out;
  out << "node\tk\tvalue\trule\tj\n";
  for (int u = 0; u < table.tree.size(); ++u)
    for (size_t k = 1; k <= table.cost[u].size(); ++k) {
      out << u << '\t' << k << '\t';
      if (table.cost[u][k - 1] >= kInf)
        out << "inf";
      else
        out << table.cost[u][k - 1];
      out << '\t' << static_cast<int>(table.rule[u][k - 1]) << '\t'
          << table.split[u][k - 1] << '\n';
    }
  return out.str();
}

}  // namespace cluedit
