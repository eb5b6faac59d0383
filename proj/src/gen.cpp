#include "cluedit/gen.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace cluedit {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Sizes of a uniform random composition of n into m positive parts, via
// m - 1 distinct cut points.
std::vector<int> random_composition(std::mt19937_64& rng, int n, int m) {
  std::vector<int> cuts;
  std::vector<char> used(n, 0);
  while (static_cast<int>(cuts.size()) < m - 1) {
    int c = rand_int(rng, 1, n - 1);
    if (!used[c]) {
      used[c] = 1;
      cuts.push_back(c);
    }
  }
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  for (size_t i = 1; i < cuts.size(); ++i)
    sizes.push_back(cuts[i] - cuts[i - 1]);
  return sizes;
}

struct GenNode {
  CotreeKind kind = CotreeKind::Zero;
  int leaf = -1;
  std::vector<std::unique_ptr<GenNode>> children;
};

std::unique_ptr<GenNode> grow(const CotreeGenConfig& cfg, std::mt19937_64& rng,
                              int n, CotreeKind kind, int& next_leaf) {
  auto node = std::make_unique<GenNode>();
  if (n == 1) {
    node->leaf = next_leaf++;
    return node;
  }
  node->kind = kind;
  const CotreeKind child_kind =
      kind == CotreeKind::Zero ? CotreeKind::One : CotreeKind::Zero;
  const int arity = rand_int(rng, 2, std::max(2, std::min(cfg.max_arity, n)));

  std::vector<int> sizes;
  if (cfg.tpg && kind == CotreeKind::One) {
    // All children but one are single leaves, so every join node keeps at
    // most one internal child.
    sizes.assign(arity - 1, 1);
    sizes.push_back(n - (arity - 1));
  } else {
    sizes = random_composition(rng, n, std::min(arity, n));
  }
  for (int size : sizes)
    node->children.push_back(grow(cfg, rng, size, child_kind, next_leaf));
  return node;
}

void relabel_leaves(GenNode* node, const std::vector<int>& perm) {
  if (node->leaf >= 0) {
    node->leaf = perm[node->leaf];
    return;
  }
  for (auto& c : node->children) relabel_leaves(c.get(), perm);
}

void to_edges(const GenNode* node, std::vector<int>& clade, Graph& g) {
  if (node->leaf >= 0) {
    clade = {node->leaf};
    return;
  }
  clade.clear();
  std::vector<std::vector<int>> clades;
  for (const auto& c : node->children) {
    std::vector<int> child_clade;
    to_edges(c.get(), child_clade, g);
    clade.insert(clade.end(), child_clade.begin(), child_clade.end());
    clades.push_back(std::move(child_clade));
  }
  if (node->kind == CotreeKind::One)
    for (size_t a = 0; a < clades.size(); ++a)
      for (size_t b = a + 1; b < clades.size(); ++b)
        for (int u : clades[a])
          for (int v : clades[b]) g.add_edge(std::min(u, v), std::max(u, v));
}

}  // namespace

Graph random_cograph_with(const CotreeGenConfig& cfg, std::mt19937_64& rng) {
  if (cfg.leaves < 0) throw std::invalid_argument("negative leaf count");
  if (cfg.leaves == 0) return Graph(0);
  int next_leaf = 0;
  CotreeKind root = rand_unit(rng) < cfg.root_one_prob ? CotreeKind::One
                                                       : CotreeKind::Zero;
  auto temp = grow(cfg, rng, cfg.leaves, root, next_leaf);
  if (cfg.shuffle_ids) {
    std::vector<int> perm(cfg.leaves);
    for (int i = 0; i < cfg.leaves; ++i) perm[i] = i;
    for (int i = cfg.leaves - 1; i > 0; --i)
      std::swap(perm[i], perm[rand_int(rng, 0, i)]);
    relabel_leaves(temp.get(), perm);
  }
  Graph g(cfg.leaves);
  std::vector<int> clade;
  to_edges(temp.get(), clade, g);
  return g;
}

Graph random_cograph(int n, std::mt19937_64& rng) {
  CotreeGenConfig cfg;
  cfg.leaves = n;
  cfg.tpg = false;
  return random_cograph_with(cfg, rng);
}

Graph random_tpg(int n, std::mt19937_64& rng) {
  CotreeGenConfig cfg;
  cfg.leaves = n;
  cfg.tpg = true;
  return random_cograph_with(cfg, rng);
}

Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rand_unit(rng) < edge_prob) g.add_edge(u, v);
  return g;
}

}  // namespace cluedit
