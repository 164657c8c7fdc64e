#pragma once

#include <stdexcept>

#include "localds/graph.hpp"

namespace localds {

// Hard input-size guards: exceeding a cap is an error, never a silent
// best-effort answer.
inline constexpr int kDefaultExactCap = 25;        // branch-and-bound solvers
inline constexpr int kDefaultEnumerationCap = 20;  // subset-enumeration solvers

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dominate `targets` using only vertices from `allowed`.
struct DominationInstance {
  Graph graph;
  VertexSet targets;
  VertexSet allowed;
};

// All solvers break ties identically: among minimum-size solutions, the
// lexicographically smallest sorted id sequence is returned.

VertexSet mds_exact(const Graph& g, int cap = kDefaultExactCap);
VertexSet mds_subset_exact(const DominationInstance& inst, int cap = kDefaultExactCap);
VertexSet mvc_exact(const Graph& g, int cap = kDefaultExactCap);

// Independent second route: plain subset enumeration by increasing
// cardinality, coverage checked straight off the adjacency structure.
// Exists to cross-check the branch-and-bound solvers.
VertexSet mds_exact_by_enumeration(const Graph& g, int cap = kDefaultEnumerationCap);
VertexSet mds_subset_exact_by_enumeration(const DominationInstance& inst,
                                          int cap = kDefaultEnumerationCap);
VertexSet mvc_exact_by_enumeration(const Graph& g, int cap = kDefaultEnumerationCap);

// Every vertex of b is in s or adjacent to a member of s.
bool verify_dominating(const Graph& g, const VertexSet& s, const VertexSet& b);
// Every edge of g has an endpoint in s.
bool verify_vertex_cover(const Graph& g, const VertexSet& s);

// How many vertices other than v are needed to dominate N[v]; only the
// 1-versus-more threshold is ever consumed, and one vertex suffices
// exactly when some other closed neighborhood contains N[v].
enum class Gamma { kOne, kTwoOrMore };
Gamma gamma(const Graph& g, Vertex v);

}  // namespace localds
