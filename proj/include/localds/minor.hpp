#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "localds/graph.hpp"

namespace localds {

inline constexpr int kDefaultMinorCap = 20;

// Minor model of K_{2,t}: two hub branch sets plus t spoke branch sets,
// all disjoint and connected, with every spoke adjacent to both hubs.
// edge_to_a[i] / edge_to_b[i] certify spoke i's hub adjacencies as
// (hub vertex, spoke vertex) pairs.
struct MinorWitness {
  VertexSet hub_a;
  VertexSet hub_b;
  std::vector<VertexSet> spokes;
  std::vector<std::pair<Vertex, Vertex>> edge_to_a;
  std::vector<std::pair<Vertex, Vertex>> edge_to_b;
};

// Exhaustive search: present iff a K_{2,t} minor model exists.  Graphs
// larger than `cap` vertices are refused; a safety budget on the hub
// search aborts pathological inputs instead of hanging.
std::optional<MinorWitness> contains_k2t_minor(const Graph& g, int t, int cap = kDefaultMinorCap);

// Smallest t such that g has no K_{2,t} minor.
int certify_class(const Graph& g, int cap = kDefaultMinorCap);

// Re-checks every invariant of a witness against the host graph.
bool validate_minor_witness(const Graph& g, int t, const MinorWitness& w);

}  // namespace localds
