#pragma once

#include <string>

#include "cluedit/graph.hpp"

namespace cluedit {

// Graph text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n.  Tokens are whitespace-separated; '#' starts a comment
// that runs to end of line.  parse_graph_text throws ParseError.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

Graph read_graph_file(const std::string& path);  // ParseError / runtime_error

// Canonical clustering JSON: {"clusters": [[..], ..], "cost": c} with
// clusters sorted by minimum element and members ascending.  When engine is
// nonempty an "engine" key is added (used by the CLI).
std::string clustering_json(long long cost, const Clustering& c,
                            const std::string& engine = "");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cluedit
