#include "cluedit/gadget.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cluedit/errors.hpp"

namespace cluedit {

long long PackingInstance::total() const {
  return std::accumulate(items.begin(), items.end(), 0LL);
}

PackingInstance parse_packing(const std::string& text) {
  PackingInstance inst;
  std::vector<long long> values;
  int line = 1;
  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (c == '\n') {
      ++line;
      ++pos;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++pos;
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      size_t start = pos;
      if (c == '-') ++pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start + (c == '-' ? 1u : 0u))
        throw ParseError("malformed integer", line);
      values.push_back(std::stoll(text.substr(start, pos - start)));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line);
    }
  }
  if (values.size() < 2) throw ParseError("missing 'k b' header", 1);
  if (values[0] < 0 || values[0] > 1000000)
    throw ParseError("bin count out of range", 1);
  if (values[1] < 1) throw ParseError("capacity must be positive", 1);
  inst.bins = static_cast<int>(values[0]);
  inst.capacity = values[1];
  inst.items.assign(values.begin() + 2, values.end());
  for (long long a : inst.items)
    if (a < 1) throw ParseError("item sizes must be positive", 1);
  return inst;
}

ToPerfectResult to_perfect(const PackingInstance& inst) {
  for (long long a : inst.items)
    if (a < 1) throw std::invalid_argument("item sizes must be positive");
  long long total = inst.total();
  long long max_item = 0;
  for (long long a : inst.items) max_item = std::max(max_item, a);
  if (max_item > inst.capacity ||
      total > static_cast<long long>(inst.bins) * inst.capacity)
    return {PackingReduction::TriviallyNo, {}};

  PackingInstance out = inst;
  if (out.bins % 2 == 1) {
    out.items.push_back(out.capacity);  // fills the extra bin exactly
    out.bins += 1;
    total += out.capacity;
  }
  if (10 * total <= static_cast<long long>(out.bins) * out.capacity)
    return {PackingReduction::AlwaysPackable, {}};
  long long pad = static_cast<long long>(out.bins) * out.capacity - total;
  out.items.insert(out.items.end(), static_cast<size_t>(pad), 1);
  return {PackingReduction::Perfect, std::move(out)};
}

namespace {

struct PackSearch {
  std::vector<std::pair<long long, int>> items;  // (size desc, original idx)
  std::vector<long long> residual;
  std::vector<int> bin_of;  // per sorted position
  std::set<std::vector<long long>> dead;  // (depth prepended) residual keys

  bool dfs(size_t idx) {
    if (idx == items.size()) return true;
    std::vector<long long> key = residual;
    std::sort(key.begin(), key.end());
    key.push_back(static_cast<long long>(idx));
    if (dead.count(key)) return false;

    long long size = items[idx].first;
    long long tried_residual = -1;
    for (size_t b = 0; b < residual.size(); ++b) {
      if (residual[b] < size) continue;
      if (residual[b] == tried_residual) continue;  // symmetric bin
      tried_residual = residual[b];
      residual[b] -= size;
      bin_of[idx] = static_cast<int>(b);
      if (dfs(idx + 1)) return true;
      residual[b] += size;
    }
    dead.insert(std::move(key));
    return false;
  }
};

}  // namespace

PackingDecision decide_packing(const PackingInstance& inst, bool perfect) {
  for (long long a : inst.items)
    if (a < 1) throw std::invalid_argument("item sizes must be positive");
  long long total = inst.total();
  if (total > 64 && inst.items.size() > 12)
    throw BudgetExceeded("packing instance too large for exhaustive search",
                         static_cast<int>(inst.items.size()),
                         static_cast<unsigned long long>(total));

  PackingDecision out;
  if (perfect && total != static_cast<long long>(inst.bins) * inst.capacity)
    return out;  // cannot fill every bin exactly

  PackSearch search;
  for (size_t i = 0; i < inst.items.size(); ++i)
    search.items.emplace_back(inst.items[i], static_cast<int>(i));
  std::sort(search.items.begin(), search.items.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  search.residual.assign(inst.bins, inst.capacity);
  search.bin_of.assign(search.items.size(), -1);
  if (!search.dfs(0)) return out;

  out.packable = true;
  out.bins.assign(inst.bins, {});
  for (size_t pos = 0; pos < search.items.size(); ++pos)
    out.bins[search.bin_of[pos]].push_back(search.items[pos].second);
  for (auto& bin : out.bins) std::sort(bin.begin(), bin.end());
  return out;
}

long long gadget_target_cost(const PackingInstance& inst, long long h) {
  long long a = inst.total();
  long long s = 0;
  for (long long x : inst.items) s += x * x;
  long long kb2 = static_cast<long long>(inst.bins) * inst.capacity *
                  inst.capacity;
  if ((kb2 - s) % 2 != 0)
    throw std::logic_error("odd pair balance on a perfect instance");
  return (inst.bins - 1) * a * h + (kb2 - s) / 2;
}

GadgetOutput build_gadget(const PackingInstance& inst, long long h) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  long long total = inst.total();
  if (total != static_cast<long long>(inst.bins) * inst.capacity)
    throw std::invalid_argument("items must sum to exactly k*b");

  long long n_ll = static_cast<long long>(inst.bins) * h + total;
  if (n_ll > 20000)
    throw std::invalid_argument("gadget too large to materialize; lower h");
  const int n = static_cast<int>(n_ll);

  GadgetOutput out;
  out.h = h;
  out.t = gadget_target_cost(inst, h);
  out.graph = Graph(n);
  int next = 0;
  for (int i = 0; i < inst.bins; ++i) {
    out.b_blocks.emplace_back(next, static_cast<int>(h));
    next += static_cast<int>(h);
  }
  for (long long a : inst.items) {
    out.a_blocks.emplace_back(next, static_cast<int>(a));
    next += static_cast<int>(a);
  }

  auto add_clique = [&](int first, int size) {
    for (int u = first; u < first + size; ++u)
      for (int v = u + 1; v < first + size; ++v) out.graph.add_edge(u, v);
  };
  for (auto [first, size] : out.b_blocks) add_clique(first, size);
  for (auto [first, size] : out.a_blocks) add_clique(first, size);
  const int anchor_end = inst.bins * static_cast<int>(h);
  for (int u = 0; u < anchor_end; ++u)
    for (int v = anchor_end; v < n; ++v) out.graph.add_edge(u, v);
  return out;
}

GadgetReport verify_gadget(const PackingInstance& inst, long long h,
                           unsigned long long budget) {
  if (h > 100000000)
    throw std::invalid_argument("h too large for overflow-safe verification");
  GadgetReport report;
  report.h = h;
  GadgetOutput out = build_gadget(inst, h);
  report.t = out.t;

  CriticalCliquePartition q = critical_cliques(out.graph);
  report.quotient_parts = static_cast<int>(q.parts.size());

  // The closed-neighborhood classes must be exactly the declared blocks.
  // Sole exception: one anchor and one item block merge when k = n = 1
  // (the gadget is then a single clique).
  std::set<std::vector<int>> expected;
  auto block_vertices = [](std::pair<int, int> blk) {
    std::vector<int> vs(blk.second);
    for (int i = 0; i < blk.second; ++i) vs[i] = blk.first + i;
    return vs;
  };
  if (inst.bins == 1 && inst.items.size() == 1) {
    std::vector<int> all(out.graph.n());
    for (int v = 0; v < out.graph.n(); ++v) all[v] = v;
    expected.insert(all);
  } else {
    for (auto blk : out.b_blocks) expected.insert(block_vertices(blk));
    for (auto blk : out.a_blocks) expected.insert(block_vertices(blk));
  }
  std::set<std::vector<int>> actual(q.parts.begin(), q.parts.end());
  report.quotient_matches_blocks = expected == actual;

  // Enumerate all optimal clusterings of the quotient.  Classes stay whole
  // in some optimum, and every optimum respects them, so the quotient
  // optima are in bijection with the graph's optima.
  const int parts = report.quotient_parts;
  unsigned long long count = partition_count_capped(parts, -1, budget);
  if (count > budget)
    throw BudgetExceeded("gadget quotient exceeds partition budget", parts,
                         count);
  PartitionEnumerator en(parts);
  std::vector<int> block_of;
  long long best = kCostInf;
  std::vector<std::vector<int>> optima;
  while (en.next(block_of)) {
    long long cost = 0;
    for (int i = 0; i < parts; ++i)
      for (int j = i + 1; j < parts; ++j) {
        bool same = block_of[i] == block_of[j];
        if (same != q.quotient.has_edge(i, j)) cost += q.weights[i] * q.weights[j];
      }
    if (cost < best) {
      best = cost;
      optima.clear();
    }
    if (cost == best) optima.push_back(block_of);
  }
  report.c_star = best;

  auto block_count = [](const std::vector<int>& assign) {
    return assign.empty()
               ? 0
               : *std::max_element(assign.begin(), assign.end()) + 1;
  };
  bool clusters_all_k = true;
  bool sizes_all_equal = true;
  for (const auto& assign : optima) {
    int blocks = block_count(assign);
    if (blocks != inst.bins) clusters_all_k = false;
    std::vector<long long> size(blocks, 0);
    for (int i = 0; i < parts; ++i) size[assign[i]] += q.weights[i];
    for (long long s : size)
      if (s != h + inst.capacity) sizes_all_equal = false;
  }
  {
    const auto& first = optima.front();
    report.optimal_cluster_count = block_count(first);
    std::vector<long long> size(report.optimal_cluster_count, 0);
    for (int i = 0; i < parts; ++i) size[first[i]] += q.weights[i];
    report.cluster_sizes = size;
    std::sort(report.cluster_sizes.begin(), report.cluster_sizes.end());
  }

  report.packing_decision = decide_packing(inst, true).packable;
  report.check_cluster_count = clusters_all_k;
  report.check_cost_lower_bound = best >= report.t;
  report.check_equality_iff_packing =
      (best == report.t) == report.packing_decision;
  report.check_equal_sizes = best != report.t || sizes_all_equal;
  return report;
}

}  // namespace cluedit
