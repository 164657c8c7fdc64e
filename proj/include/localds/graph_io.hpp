#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "localds/graph.hpp"

namespace localds {

// Plain-text edge list.  First significant line is "n m", followed by m
// lines "u v" with 0-based endpoints.  Blank lines and lines starting with
// '#' are ignored.  Reading is strict: bad counts, stray tokens, duplicate
// or out-of-range edges all throw std::runtime_error.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

// Canonical form: header, then edges u < v in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

std::string to_edge_list_string(const Graph& g);
Graph from_edge_list_string(const std::string& text);

}  // namespace localds
