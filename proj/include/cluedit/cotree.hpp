#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cluedit/graph.hpp"

namespace cluedit {

enum class CotreeKind : std::uint8_t { Zero = 0, One = 1 };

// Rooted cotree over vertex ids: leaves carry one vertex each, internal
// nodes are union (0) or join (1) nodes, and two vertices are adjacent in
// the represented graph iff their lowest common ancestor is a join node.
//
// Canonical form: every internal node has >= 2 children, no internal node
// has a child of its own kind, and children are ordered by (clade size,
// smallest clade vertex).  Binary form relaxes the same-kind rule so every
// internal node has exactly 2 children.  Node ids are preorder: a parent's
// id is smaller than its children's.
class Cotree {
 public:
  struct Node {
    int parent = -1;
    CotreeKind kind = CotreeKind::Zero;
    int leaf = -1;  // vertex id at a leaf, -1 for internal nodes
    std::vector<int> children;
    std::vector<int> clade;  // sorted vertex ids below this node
  };

  Cotree() = default;

  int root() const { return nodes_.empty() ? -1 : 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }
  int leaf_count() const { return leaf_count_; }
  const Node& node(int i) const { return nodes_[i]; }
  bool is_leaf(int i) const { return nodes_[i].leaf >= 0; }
  int clade_size(int i) const { return static_cast<int>(nodes_[i].clade.size()); }

  // Construction happens through a builder walk; see cotree.cpp.
  struct Builder;

 private:
  std::vector<Node> nodes_;
  int leaf_count_ = 0;
};

// Recognition result: cotree when the graph is a cograph, otherwise an
// induced path a-b-c-d on four vertices as certificate.
struct CographResult {
  std::optional<Cotree> cotree;
  std::array<int, 4> p4{-1, -1, -1, -1};
  bool is_cograph() const { return cotree.has_value(); }
};

CographResult build_cotree(const Graph& g);

// True iff every join node has at most one non-leaf child (t canonical).
// Such cotrees are exactly the ones whose graphs avoid both P4 and C4.
bool is_trivially_perfect(const Cotree& t);

Cotree canonicalize(const Cotree& t);
// Expands multiway nodes into right-nested chains of binary same-kind
// nodes.  Canonical child order places leaves first, so join chains peel
// leaf children before descending into the lone internal child.
Cotree binarize(const Cotree& t);

Graph graph_of_cotree(const Cotree& t);

// S-expression text: leaf "v<id>", internal "(0 ...)" / "(1 ...)".
std::string cotree_sexpr(const Cotree& t);

// Brute-force certificate searches (quartic; used on rejection paths and as
// cross-checks).  Returned P4s are in path order, C4s in cycle order.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g);
std::optional<std::array<int, 4>> find_induced_c4(const Graph& g);

// Extracts an induced C4 from a canonical cotree that fails the trivially
// perfect test, without touching the graph.
std::optional<std::array<int, 4>> c4_from_cotree(const Cotree& t);

}  // namespace cluedit
