#include "cluedit/nlc.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cluedit/errors.hpp"

namespace cluedit {

long long CountMatrix::row_sum(int i) const {
  long long s = 0;
  for (int j = 0; j < p; ++j) s += at(i, j);
  return s;
}

long long CountMatrix::col_sum(int j) const {
  long long s = 0;
  for (int i = 0; i < k; ++i) s += at(i, j);
  return s;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
  enum class Type { LParen, RParen, Symbol, Int, End } type;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= text_.size()) {
      tok.type = Token::Type::End;
      return tok;
    }
    char c = text_[pos_];
    if (c == '(') {
      tok.type = Token::Type::LParen;
      advance(1);
      return tok;
    }
    if (c == ')') {
      tok.type = Token::Type::RParen;
      advance(1);
      return tok;
    }
    if (c == '-' || (c >= '0' && c <= '9')) {
      size_t start = pos_;
      if (c == '-') advance(1);
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        advance(1);
      if (pos_ == start + (c == '-' ? 1u : 0u))
        throw ParseError("malformed integer", tok.line, tok.col);
      tok.type = Token::Type::Int;
      tok.text = text_.substr(start, pos_ - start);
      tok.value = std::stoll(tok.text);
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        advance(1);
      tok.type = Token::Type::Symbol;
      tok.text = text_.substr(start, pos_ - start);
      return tok;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

 private:
  void advance(size_t by) {
    pos_ += by;
    col_ += static_cast<int>(by);
  }
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  NlcExpression run() {
    expect_symbol("k");
    long long k = expect_int();
    if (k < 1 || k > 64) throw ParseError("label count out of range", prev_line_, prev_col_);
    out_.k = static_cast<int>(k);
    out_.root = parse_expr();
    if (cur_.type != Token::Type::End)
      throw ParseError("trailing input after expression", cur_.line, cur_.col);
    return std::move(out_);
  }

 private:
  void shift() {
    prev_line_ = cur_.line;
    prev_col_ = cur_.col;
    cur_ = lex_.next();
  }

  void expect(Token::Type t, const char* what) {
    if (cur_.type != t)
      throw ParseError(std::string("expected ") + what, cur_.line, cur_.col);
    shift();
  }

  void expect_symbol(const std::string& name) {
    if (cur_.type != Token::Type::Symbol || cur_.text != name)
      throw ParseError("expected '" + name + "'", cur_.line, cur_.col);
    shift();
  }

  long long expect_int() {
    if (cur_.type != Token::Type::Int)
      throw ParseError("expected an integer", cur_.line, cur_.col);
    long long v = cur_.value;
    shift();
    return v;
  }

  int expect_label() {
    int line = cur_.line, col = cur_.col;
    long long v = expect_int();
    if (v < 1 || v > out_.k)
      throw ParseError("label out of range 1..k", line, col);
    return static_cast<int>(v) - 1;
  }

  std::vector<std::pair<int, int>> parse_pairs() {
    expect(Token::Type::LParen, "'('");
    std::vector<std::pair<int, int>> pairs;
    while (cur_.type == Token::Type::LParen) {
      shift();
      int a = expect_label();
      int b = expect_label();
      expect(Token::Type::RParen, "')'");
      pairs.emplace_back(a, b);
    }
    expect(Token::Type::RParen, "')'");
    return pairs;
  }

  int parse_expr() {
    expect(Token::Type::LParen, "'('");
    if (cur_.type != Token::Type::Symbol)
      throw ParseError("expected one of v, x, r", cur_.line, cur_.col);
    std::string op = cur_.text;
    int op_line = cur_.line, op_col = cur_.col;
    shift();

    NlcExpression::Node node;
    if (op == "v") {
      node.kind = NlcExpression::Kind::Leaf;
      node.label = expect_label();
      node.leaf_index = out_.leaf_count++;
    } else if (op == "x") {
      node.kind = NlcExpression::Kind::Join;
      node.pairs = parse_pairs();
      std::sort(node.pairs.begin(), node.pairs.end());
      node.pairs.erase(std::unique(node.pairs.begin(), node.pairs.end()),
                       node.pairs.end());
      node.left = parse_expr();
      node.right = parse_expr();
    } else if (op == "r") {
      node.kind = NlcExpression::Kind::Relabel;
      node.relabel.resize(out_.k);
      for (int i = 0; i < out_.k; ++i) node.relabel[i] = i;
      std::vector<char> seen(out_.k, 0);
      for (auto [from, to] : parse_pairs()) {
        if (seen[from])
          throw ParseError("duplicate relabel source", op_line, op_col);
        seen[from] = 1;
        node.relabel[from] = to;
      }
      node.left = parse_expr();
    } else {
      throw ParseError("unknown operator '" + op + "'", op_line, op_col);
    }
    expect(Token::Type::RParen, "')'");
    out_.nodes.push_back(std::move(node));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  Lexer lex_;
  Token cur_;
  int prev_line_ = 1, prev_col_ = 1;
  NlcExpression out_;
};

}  // namespace

NlcExpression parse_expression(const std::string& text) {
  return Parser(text).run();
}

// ------------------------------------------------------------- evaluation

namespace {

// Vertex ids are in-order leaf positions, so every subexpression owns a
// contiguous range [lo, hi).
struct EvalRange {
  int lo, hi;
};

EvalRange eval_rec(const NlcExpression& e, int id, LabeledGraph& out) {
  const auto& node = e.nodes[id];
  switch (node.kind) {
    case NlcExpression::Kind::Leaf: {
      out.label[node.leaf_index] = node.label;
      return {node.leaf_index, node.leaf_index + 1};
    }
    case NlcExpression::Kind::Join: {
      EvalRange a = eval_rec(e, node.left, out);
      EvalRange b = eval_rec(e, node.right, out);
      std::vector<char> wanted(static_cast<size_t>(e.k) * e.k, 0);
      for (auto [i, j] : node.pairs) wanted[static_cast<size_t>(i) * e.k + j] = 1;
      for (int u = a.lo; u < a.hi; ++u)
        for (int v = b.lo; v < b.hi; ++v)
          if (wanted[static_cast<size_t>(out.label[u]) * e.k + out.label[v]])
            out.graph.add_edge(std::min(u, v), std::max(u, v));
      return {a.lo, b.hi};
    }
    case NlcExpression::Kind::Relabel: {
      EvalRange a = eval_rec(e, node.left, out);
      for (int u = a.lo; u < a.hi; ++u) out.label[u] = node.relabel[out.label[u]];
      return a;
    }
  }
  throw std::logic_error("corrupt expression node");
}

}  // namespace

LabeledGraph eval_expression(const NlcExpression& e) {
  LabeledGraph out;
  out.graph = Graph(e.leaf_count);
  out.label.assign(e.leaf_count, 0);
  if (e.root >= 0 && e.leaf_count > 0) eval_rec(e, e.root, out);
  return out;
}

// ------------------------------------------------------------------- cost

long long h_cost(const CountMatrix& mv, const CountMatrix& mw,
                 const std::vector<std::pair<int, int>>& pairs) {
  // Start from "every same-cluster cross pair needs an insertion", then for
  // each connected label pair trade insertions for deletions: connected
  // pairs in different clusters cost one deletion, connected same-cluster
  // pairs cost nothing, hence the -2 correction on same-cluster terms.
  long long total = 0;
  for (int j = 0; j < mv.p; ++j) total += mv.col_sum(j) * mw.col_sum(j);
  for (auto [i, ip] : pairs) {
    total += mv.row_sum(i) * mw.row_sum(ip);
    long long same = 0;
    for (int j = 0; j < mv.p; ++j)
      same += static_cast<long long>(mv.at(i, j)) * mw.at(ip, j);
    total -= 2 * same;
  }
  return total;
}

// --------------------------------------------------------------------- DP

namespace {

struct MatrixKey {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct NodeStates {
  std::vector<CountMatrix> mats;
  std::vector<long long> cost;
  std::vector<std::pair<int, int>> back;
  std::unordered_map<std::vector<int>, int, MatrixKey> index;

  // Keeps the first strict minimizer per matrix.
  void upsert(CountMatrix m, long long c, int bl, int br) {
    auto it = index.find(m.cells);
    if (it == index.end()) {
      index.emplace(m.cells, static_cast<int>(mats.size()));
      mats.push_back(std::move(m));
      cost.push_back(c);
      back.emplace_back(bl, br);
    } else if (c < cost[it->second]) {
      cost[it->second] = c;
      back[it->second] = {bl, br};
    }
  }
};

void assign_columns(const NlcExpression& e,
                    const std::vector<NodeStates>& states, int id, int state,
                    std::vector<int>& column_of) {
  const auto& node = e.nodes[id];
  const auto& st = states[id];
  switch (node.kind) {
    case NlcExpression::Kind::Leaf: {
      const CountMatrix& m = st.mats[state];
      for (int j = 0; j < m.p; ++j)
        if (m.at(node.label, j) == 1) {
          column_of[node.leaf_index] = j;
          return;
        }
      throw std::logic_error("leaf state without a column");
    }
    case NlcExpression::Kind::Join:
      assign_columns(e, states, node.left, st.back[state].first, column_of);
      assign_columns(e, states, node.right, st.back[state].second, column_of);
      return;
    case NlcExpression::Kind::Relabel:
      assign_columns(e, states, node.left, st.back[state].first, column_of);
      return;
  }
}

}  // namespace

std::optional<Solution> solve_p_cluster(const NlcExpression& e, int p,
                                        bool exact_p, NlcSolveStats* stats) {
  if (p < 1) throw std::invalid_argument("cluster count must be positive");
  const int n = e.leaf_count;
  if (exact_p && p > n) return std::nullopt;
  if (n == 0) return Solution{0, {}};
  const int pe = std::min(p, n);  // > n columns can never all be used

  std::vector<NodeStates> states(e.nodes.size());
  for (size_t id = 0; id < e.nodes.size(); ++id) {
    const auto& node = e.nodes[id];
    auto& st = states[id];
    switch (node.kind) {
      case NlcExpression::Kind::Leaf: {
        for (int j = 0; j < pe; ++j) {
          CountMatrix m(e.k, pe);
          m.at(node.label, j) = 1;
          st.upsert(std::move(m), 0, -1, -1);
        }
        break;
      }
      case NlcExpression::Kind::Join: {
        const auto& lv = states[node.left];
        const auto& rv = states[node.right];
        for (size_t a = 0; a < lv.mats.size(); ++a)
          for (size_t b = 0; b < rv.mats.size(); ++b) {
            CountMatrix m = lv.mats[a];
            for (size_t c = 0; c < m.cells.size(); ++c)
              m.cells[c] += rv.mats[b].cells[c];
            long long cost = lv.cost[a] + rv.cost[b] +
                             h_cost(lv.mats[a], rv.mats[b], node.pairs);
            st.upsert(std::move(m), cost, static_cast<int>(a),
                      static_cast<int>(b));
          }
        break;
      }
      case NlcExpression::Kind::Relabel: {
        const auto& lv = states[node.left];
        for (size_t a = 0; a < lv.mats.size(); ++a) {
          CountMatrix m(e.k, pe);
          for (int i = 0; i < e.k; ++i)
            for (int j = 0; j < pe; ++j)
              m.at(node.relabel[i], j) += lv.mats[a].at(i, j);
          st.upsert(std::move(m), lv.cost[a], static_cast<int>(a), -1);
        }
        break;
      }
    }
    if (stats) stats->states_per_node.push_back(st.mats.size());
  }

  const auto& root = states[e.root];
  long long best = -1;
  int best_state = -1;
  for (size_t s = 0; s < root.mats.size(); ++s) {
    if (exact_p) {
      bool full = true;
      for (int j = 0; j < pe && full; ++j)
        if (root.mats[s].col_sum(j) == 0) full = false;
      if (!full) continue;
    }
    if (best_state < 0 || root.cost[s] < best) {
      best = root.cost[s];
      best_state = static_cast<int>(s);
    }
  }
  if (best_state < 0) return std::nullopt;  // unreachable for p <= n

  std::vector<int> column_of(n, -1);
  assign_columns(e, states, e.root, best_state, column_of);
  Clustering by_column(pe);
  for (int v = 0; v < n; ++v) by_column[column_of[v]].push_back(v);
  Clustering clusters;
  for (auto& c : by_column)
    if (!c.empty()) clusters.push_back(std::move(c));
  return Solution{best, canonical_clustering(std::move(clusters))};
}

// ------------------------------------------------------------ enumeration

WellDefinedEnumerator::WellDefinedEnumerator(std::vector<int> label_counts,
                                             int p)
    : counts_(std::move(label_counts)), p_(p),
      current_(static_cast<int>(counts_.size()), p) {
  if (p_ < 1) throw std::invalid_argument("column count must be positive");
  for (int c : counts_)
    if (c < 0) throw std::invalid_argument("negative label count");
  for (size_t i = 0; i < counts_.size(); ++i) current_.at(static_cast<int>(i), 0) = counts_[i];
}

bool WellDefinedEnumerator::advance_row(int i) {
  // Next composition of counts_[i] in the (c,0,..) .. (0,..,c) order: move
  // one unit from the rightmost positive non-final cell one step right and
  // collect everything after it.
  int last = current_.at(i, p_ - 1);
  int t = -1;
  for (int j = p_ - 2; j >= 0; --j)
    if (current_.at(i, j) > 0) {
      t = j;
      break;
    }
  if (t < 0) return false;
  current_.at(i, t) -= 1;
  current_.at(i, t + 1) = last + 1;
  for (int j = t + 2; j < p_; ++j) current_.at(i, j) = 0;
  return true;
}

bool WellDefinedEnumerator::next(CountMatrix& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = current_;
    return true;
  }
  for (int i = static_cast<int>(counts_.size()) - 1; i >= 0; --i) {
    if (advance_row(i)) {
      out = current_;
      return true;
    }
    // Reset row i and carry into the previous row.
    current_.at(i, 0) = counts_[i];
    for (int j = 1; j < p_; ++j) current_.at(i, j) = 0;
  }
  done_ = true;
  return false;
}

// -------------------------------------------------------- cotree bridging

namespace {

int emit_expr(const Cotree& t, int id, NlcExpression& e,
              std::vector<int>& vertex_of_leaf) {
  const auto& node = t.node(id);
  NlcExpression::Node out;
  if (node.leaf >= 0) {
    out.kind = NlcExpression::Kind::Leaf;
    out.label = 0;
    out.leaf_index = e.leaf_count++;
    vertex_of_leaf.push_back(node.leaf);
  } else {
    out.kind = NlcExpression::Kind::Join;
    if (node.kind == CotreeKind::One) out.pairs = {{0, 0}};
    out.left = emit_expr(t, node.children[0], e, vertex_of_leaf);
    out.right = emit_expr(t, node.children[1], e, vertex_of_leaf);
  }
  e.nodes.push_back(std::move(out));
  return static_cast<int>(e.nodes.size()) - 1;
}

bool tree_is_binary(const Cotree& t) {
  for (int i = 0; i < t.size(); ++i)
    if (!t.is_leaf(i) && t.node(i).children.size() != 2) return false;
  return true;
}

}  // namespace

CotreeExpression cotree_to_expression(const Cotree& t) {
  CotreeExpression out;
  out.expr.k = 1;
  if (t.empty()) return out;
  const Cotree* source = &t;
  Cotree binary;
  if (!tree_is_binary(t)) {
    binary = binarize(t);
    source = &binary;
  }
  out.expr.root = emit_expr(*source, source->root(), out.expr, out.vertex_of_leaf);
  return out;
}

}  // namespace cluedit
