#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "localds/graph.hpp"

namespace localds {

// What a vertex sees after r synchronous rounds: the subgraph induced on its
// radius-r ball.  Local ids are dense 0..k-1 in increasing order of original
// id, so rank comparisons on original ids survive the relabeling.
struct NodeView {
  Vertex root_local = 0;             // the probed vertex, as a local id
  Graph view;                        // g[N^r[root]]
  std::vector<Vertex> original_ids;  // local id -> original id, strictly increasing
  int radius = 0;

  Vertex root_original() const { return original_ids[root_local]; }
};

struct NodeOutput {
  bool member = false;
  std::int64_t payload = 0;

  bool operator==(const NodeOutput&) const = default;
};

// A deterministic per-vertex decision rule with a declared radius.  The
// simulator guarantees the rule only ever sees the radius-r view.
struct NodeProgram {
  std::string name;
  int radius = 0;
  std::function<NodeOutput(const NodeView&)> decide;
};

struct RoundTranscript {
  int rounds_used = 0;
  std::vector<int> per_vertex_radius;  // radius requested by each vertex
};

struct LocalRun {
  VertexSet chosen;  // vertices reporting member = true
  std::vector<NodeOutput> outputs;
  RoundTranscript transcript;
};

// The full-information reduction: r rounds of unbounded messages are
// exactly the radius-r ball.
NodeView collect_view(const Graph& g, Vertex v, int radius);

// Evaluates the program at every vertex.  Output is independent of the
// order vertices are processed in; the transcript charges the declared
// radius to every vertex.
LocalRun run_local(const Graph& g, const NodeProgram& prog);

// Views are equivalent when they have the same shape after rank-relabeling:
// equal size, equal root position, identical edge sets in local ids.
bool views_equivalent(const NodeView& a, const NodeView& b);

// Locality contract check: equivalent views must produce equal outputs.
// Non-equivalent views pass vacuously.
bool verify_locality(const NodeProgram& prog, const Graph& g1, Vertex v1, const Graph& g2,
                     Vertex v2);

}  // namespace localds
