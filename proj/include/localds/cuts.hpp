#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "localds/config.hpp"
#include "localds/graph.hpp"
#include "localds/local_sim.hpp"

namespace localds {

// A set of one or two vertices, pairwise within distance `radius`, whose
// removal disconnects the subgraph induced on the union of their radius-r
// balls.  `attached_components` are the resulting pieces, ordered by their
// minimum vertex.  For two-vertex cuts `minimal` means every piece touches
// the neighborhood of both members; one-vertex cuts are trivially minimal.
struct CutRecord {
  VertexSet members;
  int radius = 0;
  std::vector<VertexSet> attached_components;
  bool minimal = true;
};

// Present iff removing v disconnects g[N^r[v]].
std::optional<CutRecord> is_local_1_cut(const Graph& g, Vertex v, int r);

// All minimal r-local 2-cuts containing v, ordered by the partner's id.
// Non-minimal disconnecting pairs are not reported.
std::vector<CutRecord> local_2_cuts_at(const Graph& g, Vertex v, int r);

// Certificate that v is r-interesting: a minimal r-local 2-cut {partner, v}
// where N[v] is not inside N[partner] (witnessed by private_neighbor) and
// two attached components each hold a vertex non-adjacent to the partner.
struct InterestingWitness {
  CutRecord cut;
  Vertex partner = -1;
  Vertex private_neighbor = -1;            // in N[v] \ N[partner]
  std::pair<int, int> witness_components;  // indices into cut.attached_components
};

// Only defined for r >= 2; smaller radii throw.
std::optional<InterestingWitness> is_r_interesting(const Graph& g, Vertex v, int r);

struct CutSets {
  VertexSet one_cut;      // X: r1-local 1-cut vertices
  VertexSet interesting;  // I: r2-interesting vertices
};
CutSets enumerate_cut_sets(const Graph& g, const AlgorithmConfig& cfg);

// Every vertex belonging to some minimal r-local 2-cut.
VertexSet local_2_cut_vertices(const Graph& g, int r);

// The same predicates as per-vertex programs: membership of v computed
// entirely inside v's view.  The 1-cut test needs exactly the radius-r
// ball; the interesting test fits in radius 2r+1.
NodeProgram one_cut_program(int r);
NodeProgram interesting_program(int r);

}  // namespace localds
