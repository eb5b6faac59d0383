#include "cluedit/io.hpp"

#include <fstream>
#include <sstream>

#include "cluedit/errors.hpp"
#include "json.hpp"

namespace cluedit {

namespace {

// Splits text into integer tokens, tracking the line each token starts on
// and dropping '#' comments.
struct IntScanner {
  explicit IntScanner(const std::string& text) : text(text) {}

  bool next(long long& value, int& at_line) {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n') {
        ++line;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
    if (pos >= text.size()) return false;
    at_line = line;
    size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start || (pos == start + 1 && !isdigit(text[start])))
      throw ParseError("expected an integer", line);
    try {
      value = std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", line);
    }
    return true;
  }

  const std::string& text;
  size_t pos = 0;
  int line = 1;
};

}  // namespace

Graph parse_graph_text(const std::string& text) {
  IntScanner scan(text);
  long long n, m;
  int at;
  if (!scan.next(n, at)) throw ParseError("missing graph header", 1);
  if (!scan.next(m, at)) throw ParseError("missing edge count", at);
  if (n < 0 || m < 0) throw ParseError("negative header value", at);
  if (n > 1000000) throw ParseError("vertex count too large", at);
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!scan.next(u, at) || !scan.next(v, at))
      throw ParseError("unexpected end of edge list", at);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge endpoint out of range", at);
    if (u >= v) throw ParseError("edges must satisfy u < v", at);
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("duplicate edge", at);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  long long extra;
  if (scan.next(extra, at)) throw ParseError("trailing tokens after edge list", at);
  return g;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  return parse_graph_text(read_text_file(path));
}

std::string clustering_json(long long cost, const Clustering& c,
                            const std::string& engine) {
  nlohmann::json j;
  j["cost"] = cost;
  j["clusters"] = canonical_clustering(c);
  if (!engine.empty()) j["engine"] = engine;
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace cluedit
