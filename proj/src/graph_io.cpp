#include "localds/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace localds {

namespace {

// Next line that carries data, with comments and blanks skipped.
bool next_significant_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

std::pair<long, long> parse_two_ints(const std::string& line, const char* what) {
  std::istringstream ss(line);
  long a = 0, b = 0;
  if (!(ss >> a >> b)) throw std::runtime_error(std::string("edge list: malformed ") + what +
                                                " line: '" + line + "'");
  std::string rest;
  if (ss >> rest) throw std::runtime_error(std::string("edge list: trailing tokens on ") + what +
                                           " line: '" + line + "'");
  return {a, b};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_significant_line(in, line)) throw std::runtime_error("edge list: missing header");
  auto [n, m] = parse_two_ints(line, "header");
  if (n < 0 || m < 0) throw std::runtime_error("edge list: negative counts in header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_significant_line(in, line))
      throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, got " +
                               std::to_string(i));
    auto [u, v] = parse_two_ints(line, "edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_significant_line(in, line))
    throw std::runtime_error("edge list: unexpected extra line: '" + line + "'");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("edge list: cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("edge list: cannot open " + path.string() + " for writing");
  write_edge_list(out, g);
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

Graph from_edge_list_string(const std::string& text) {
  std::istringstream ss(text);
  return read_edge_list(ss);
}

}  // namespace localds
