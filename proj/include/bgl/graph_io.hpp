#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bgl/graph.hpp"

namespace bgl {

// Line format: `node <id> [<label>]`, `edge <id> <id>`; a token starting with
// '#' begins a comment. Errors carry the line number.
LabelledGraph parse_graph(std::string_view text);
std::string format_graph(const LabelledGraph& g);

LabelledGraph read_graph_file(const std::string& path);
std::string read_file(const std::string& path);

// Comma separated names; the empty string is the empty assignment.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& x);
std::string format_ids(const LabelledGraph& g, const NodeSet& s);  // "{a,b}"

std::vector<std::string> split_ws(std::string_view line);
std::vector<std::string> split_on(std::string_view s, char sep);

}  // namespace bgl
