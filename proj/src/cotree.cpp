#include "cluedit/cotree.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace cluedit {

namespace {

struct TempNode {
  CotreeKind kind = CotreeKind::Zero;
  int leaf = -1;
  std::vector<std::unique_ptr<TempNode>> children;
  std::vector<int> clade;
};

std::unique_ptr<TempNode> make_leaf(int v) {
  auto node = std::make_unique<TempNode>();
  node->leaf = v;
  node->clade = {v};
  return node;
}

void compute_clades(TempNode* node) {
  if (node->leaf >= 0) {
    node->clade = {node->leaf};
    return;
  }
  node->clade.clear();
  for (auto& child : node->children) {
    compute_clades(child.get());
    node->clade.insert(node->clade.end(), child->clade.begin(),
                       child->clade.end());
  }
  std::sort(node->clade.begin(), node->clade.end());
}

void sort_children_rec(TempNode* node) {
  if (node->leaf >= 0) return;
  for (auto& child : node->children) sort_children_rec(child.get());
  std::sort(node->children.begin(), node->children.end(),
            [](const auto& a, const auto& b) {
              if (a->clade.size() != b->clade.size())
                return a->clade.size() < b->clade.size();
              return a->clade.front() < b->clade.front();
            });
}

}  // namespace

struct Cotree::Builder {
  static Cotree freeze(TempNode* root) {
    Cotree out;
    if (!root) return out;
    emit(out, root, -1);
    return out;
  }

  static int emit(Cotree& out, TempNode* node, int parent) {
    int id = static_cast<int>(out.nodes_.size());
    out.nodes_.emplace_back();
    out.nodes_[id].parent = parent;
    out.nodes_[id].kind = node->kind;
    out.nodes_[id].leaf = node->leaf;
    out.nodes_[id].clade = node->clade;
    if (node->leaf >= 0) ++out.leaf_count_;
    for (auto& child : node->children) {
      int cid = emit(out, child.get(), id);
      out.nodes_[id].children.push_back(cid);
    }
    return id;
  }
};

namespace {

// Bitset helpers over the vertex universe of g (word layout as in Graph).
using Mask = std::vector<std::uint64_t>;

Mask mask_of(const std::vector<int>& vs, int words) {
  Mask m(words, 0);
  for (int v : vs) m[v >> 6] |= 1ull << (v & 63);
  return m;
}

// Connected components of g restricted to the vertices of sub, in the plain
// graph (complement = false) or its complement (complement = true).
std::vector<std::vector<int>> components_within(const Graph& g, const Mask& sub,
                                                bool complement) {
  const int words = static_cast<int>(sub.size());
  Mask todo = sub;
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int w = 0; w < words; ++w) {
    while (todo[w]) {
      int start = w * 64 + __builtin_ctzll(todo[w]);
      todo[start >> 6] &= ~(1ull << (start & 63));
      comps.emplace_back();
      stack.push_back(start);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comps.back().push_back(v);
        const std::uint64_t* row = g.row(v);
        for (int x = 0; x < words; ++x) {
          std::uint64_t reach = complement ? ~row[x] : row[x];
          // v itself is already cleared from todo, so no self-bit fixup.
          std::uint64_t hit = reach & todo[x];
          while (hit) {
            int b = __builtin_ctzll(hit);
            int u = x * 64 + b;
            hit &= hit - 1;
            todo[x] &= ~(1ull << b);
            stack.push_back(u);
          }
        }
      }
      std::sort(comps.back().begin(), comps.back().end());
    }
  }
  return comps;
}

std::optional<std::array<int, 4>> find_p4_within(const Graph& g,
                                                 const std::vector<int>& S) {
  for (int b : S)
    for (int c : S) {
      if (b == c || !g.has_edge(b, c)) continue;
      for (int a : S) {
        if (a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c)) continue;
        for (int d : S) {
          if (d == a || d == b || d == c) continue;
          if (g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d))
            return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

std::unique_ptr<TempNode> decompose(const Graph& g, const std::vector<int>& S,
                                    std::array<int, 4>& p4, bool& failed) {
  if (S.size() == 1) return make_leaf(S[0]);
  const Mask sub = mask_of(S, g.row_words());

  auto comps = components_within(g, sub, false);
  if (comps.size() > 1) {
    auto node = std::make_unique<TempNode>();
    node->kind = CotreeKind::Zero;
    for (auto& comp : comps) {
      auto child = decompose(g, comp, p4, failed);
      if (failed) return nullptr;
      node->children.push_back(std::move(child));
    }
    return node;
  }

  auto cocomps = components_within(g, sub, true);
  if (cocomps.size() > 1) {
    auto node = std::make_unique<TempNode>();
    node->kind = CotreeKind::One;
    for (auto& comp : cocomps) {
      auto child = decompose(g, comp, p4, failed);
      if (failed) return nullptr;
      node->children.push_back(std::move(child));
    }
    return node;
  }

  // Connected and co-connected on >= 2 vertices: an induced P4 must exist.
  failed = true;
  auto witness = find_p4_within(g, S);
  if (!witness) throw std::logic_error("P4 search failed on a non-cograph");
  p4 = *witness;
  return nullptr;
}

}  // namespace

CographResult build_cotree(const Graph& g) {
  CographResult result;
  if (g.n() == 0) {
    result.cotree = Cotree();
    return result;
  }
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  bool failed = false;
  auto temp = decompose(g, all, result.p4, failed);
  if (failed) return result;
  compute_clades(temp.get());
  sort_children_rec(temp.get());
  result.cotree = Cotree::Builder::freeze(temp.get());
  return result;
}

bool is_trivially_perfect(const Cotree& t) {
  for (int i = 0; i < t.size(); ++i) {
    const auto& node = t.node(i);
    if (node.leaf >= 0 || node.kind != CotreeKind::One) continue;
    int internal = 0;
    for (int c : node.children)
      if (!t.is_leaf(c)) ++internal;
    if (internal > 1) return false;
  }
  return true;
}

namespace {

std::unique_ptr<TempNode> to_temp(const Cotree& t, int id) {
  const auto& node = t.node(id);
  if (node.leaf >= 0) return make_leaf(node.leaf);
  auto out = std::make_unique<TempNode>();
  out->kind = node.kind;
  for (int c : node.children) out->children.push_back(to_temp(t, c));
  return out;
}

// Splices same-kind children into their parent and elides single-child
// internal nodes, bottom-up.
std::unique_ptr<TempNode> normalize(std::unique_ptr<TempNode> node) {
  if (node->leaf >= 0) return node;
  std::vector<std::unique_ptr<TempNode>> flat;
  for (auto& child : node->children) {
    auto c = normalize(std::move(child));
    if (c->leaf < 0 && c->kind == node->kind) {
      for (auto& grand : c->children) flat.push_back(std::move(grand));
    } else {
      flat.push_back(std::move(c));
    }
  }
  node->children = std::move(flat);
  if (node->children.size() == 1) return std::move(node->children[0]);
  return node;
}

std::unique_ptr<TempNode> binarize_temp(const Cotree& t, int id) {
  const auto& node = t.node(id);
  if (node.leaf >= 0) return make_leaf(node.leaf);
  // Right-nested fold over the canonical child order.  Leaves sort before
  // internal children (smaller clades), so join chains keep their lone
  // internal child at the bottom.
  std::unique_ptr<TempNode> chain = binarize_temp(t, node.children.back());
  for (int i = static_cast<int>(node.children.size()) - 2; i >= 0; --i) {
    auto pair = std::make_unique<TempNode>();
    pair->kind = node.kind;
    pair->children.push_back(binarize_temp(t, node.children[i]));
    pair->children.push_back(std::move(chain));
    chain = std::move(pair);
  }
  return chain;
}

}  // namespace

Cotree canonicalize(const Cotree& t) {
  if (t.empty()) return t;
  auto temp = normalize(to_temp(t, t.root()));
  compute_clades(temp.get());
  sort_children_rec(temp.get());
  return Cotree::Builder::freeze(temp.get());
}

Cotree binarize(const Cotree& t) {
  if (t.empty()) return t;
  auto temp = binarize_temp(t, t.root());
  compute_clades(temp.get());
  return Cotree::Builder::freeze(temp.get());
}

Graph graph_of_cotree(const Cotree& t) {
  const int n = t.leaf_count();
  std::vector<char> seen(n, 0);
  for (int i = 0; i < t.size(); ++i) {
    int leaf = t.node(i).leaf;
    if (leaf < 0) continue;
    if (leaf >= n || seen[leaf])
      throw std::invalid_argument("cotree leaves must carry ids 0..n-1 once");
    seen[leaf] = 1;
  }
  Graph g(n);
  for (int i = 0; i < t.size(); ++i) {
    const auto& node = t.node(i);
    if (node.leaf >= 0 || node.kind != CotreeKind::One) continue;
    for (size_t a = 0; a < node.children.size(); ++a)
      for (size_t b = a + 1; b < node.children.size(); ++b)
        for (int u : t.node(node.children[a]).clade)
          for (int v : t.node(node.children[b]).clade)
            g.add_edge(std::min(u, v), std::max(u, v));
  }
  return g;
}

namespace {

void sexpr_rec(const Cotree& t, int id, std::ostringstream& out) {
  const auto& node = t.node(id);
  if (node.leaf >= 0) {
    out << 'v' << node.leaf;
    return;
  }
  out << '(' << (node.kind == CotreeKind::One ? '1' : '0');
  for (int c : node.children) {
    out << ' ';
    sexpr_rec(t, c, out);
  }
  out << ')';
}

}  // namespace

std::string cotree_sexpr(const Cotree& t) {
  if (t.empty()) return "()";
  std::ostringstream out;
  sexpr_rec(t, t.root(), out);
  return out.str();
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return find_p4_within(g, all);
}

std::optional<std::array<int, 4>> find_induced_c4(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (!g.has_edge(b, c) || g.has_edge(a, c)) continue;
        for (int d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          if (g.has_edge(c, d) && g.has_edge(d, a) && !g.has_edge(b, d))
            return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

std::optional<std::array<int, 4>> c4_from_cotree(const Cotree& t) {
  for (int i = 0; i < t.size(); ++i) {
    const auto& node = t.node(i);
    if (node.leaf >= 0 || node.kind != CotreeKind::One) continue;
    std::vector<int> internal;
    for (int c : node.children)
      if (!t.is_leaf(c)) internal.push_back(c);
    if (internal.size() < 2) continue;
    // Two union-node children; one vertex from each side of each yields an
    // induced 4-cycle (cross pairs joined, same-side pairs non-adjacent).
    const auto& z1 = t.node(internal[0]);
    const auto& z2 = t.node(internal[1]);
    int x1 = t.node(z1.children[0]).clade.front();
    int y1 = t.node(z1.children[1]).clade.front();
    int x2 = t.node(z2.children[0]).clade.front();
    int y2 = t.node(z2.children[1]).clade.front();
    return std::array<int, 4>{x1, x2, y1, y2};
  }
  return std::nullopt;
}

}  // namespace cluedit
