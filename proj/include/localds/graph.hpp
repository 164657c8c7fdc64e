#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace localds {

using Vertex = int;
using Bits = boost::dynamic_bitset<std::uint64_t>;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> ids);
  static VertexSet single(Vertex v);
  static VertexSet from_bits(const Bits& b);

  const std::vector<Vertex>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;
  Bits to_bits(int universe) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex front() const { return ids_.front(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Simple undirected graph, immutable after construction.  Vertices are
// 0..n-1, adjacency lists are kept sorted, and a closed-neighborhood
// bitmask per vertex backs the set-heavy operations.
class Graph {
 public:
  Graph() = default;
  // Rejects out-of-range ids, self-loops and duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  // N[v] as a bitmask.
  const Bits& closed_mask(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted

  void check_vertex(Vertex v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bits> closed_;
};

// Vertices at distance <= radius from v.
VertexSet ball(const Graph& g, Vertex v, int radius);
Bits ball_bits(const Graph& g, Vertex v, int radius);

// S together with every neighbor of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
Bits closed_neighborhood_bits(const Graph& g, const Bits& s);

// Largest pairwise distance within S, measured in the host graph.
// nullopt when some pair of S is disconnected in g ("infinite").
std::optional<int> weak_diameter(const Graph& g, const VertexSet& s);

// Partition of S where u,v share a part iff a chain of S-members links
// them with consecutive host-graph distances <= r.  Parts are ordered by
// their minimum vertex.
std::vector<VertexSet> r_components(const Graph& g, const VertexSet& s, int r);

std::vector<VertexSet> connected_components(const Graph& g);
// Components of the subgraph induced by `allowed`, ordered by minimum vertex.
std::vector<VertexSet> components_within(const Graph& g, const Bits& allowed);

struct InducedSubgraph {
  Graph graph;                      // dense ids 0..|s|-1, ordered by original id
  std::vector<Vertex> to_original;  // new id -> original id
  std::vector<Vertex> from_original;  // original id -> new id, -1 if absent
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct TwinReduction {
  Graph reduced;                     // induced on class representatives
  std::vector<Vertex> representative;  // original -> lowest-id member of its class
  std::vector<Vertex> kept;            // reduced id -> original id
  std::vector<Vertex> to_reduced;      // original -> reduced id of its representative
};
// Collapses every true-twin class (N[u] == N[v]) to its lowest-id member.
// The result has no true twins; applying it twice changes nothing.
TwinReduction remove_true_twins(const Graph& g);

// All-pairs BFS distances; -1 for unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

}  // namespace localds
