#include "localds/local_sim.hpp"

#include <stdexcept>

namespace localds {

NodeView collect_view(const Graph& g, Vertex v, int radius) {
  if (radius < 0) throw std::invalid_argument("collect_view: negative radius");
  g.check_vertex(v);
  auto ind = induced_subgraph(g, ball(g, v, radius));
  NodeView out;
  out.root_local = ind.from_original[v];
  out.view = std::move(ind.graph);
  out.original_ids = std::move(ind.to_original);
  out.radius = radius;
  return out;
}

LocalRun run_local(const Graph& g, const NodeProgram& prog) {
  if (prog.radius < 0) throw std::invalid_argument("run_local: negative program radius");
  if (!prog.decide) throw std::invalid_argument("run_local: program has no decision rule");
  LocalRun run;
  run.outputs.resize(g.vertex_count());
  run.transcript.per_vertex_radius.assign(g.vertex_count(), prog.radius);
  run.transcript.rounds_used = g.vertex_count() > 0 ? prog.radius : 0;
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    run.outputs[v] = prog.decide(collect_view(g, v, prog.radius));
    if (run.outputs[v].member) members.push_back(v);
  }
  run.chosen = VertexSet(std::move(members));
  return run;
}

bool views_equivalent(const NodeView& a, const NodeView& b) {
  return a.radius == b.radius && a.root_local == b.root_local &&
         a.view.vertex_count() == b.view.vertex_count() && a.view.edges() == b.view.edges();
}

bool verify_locality(const NodeProgram& prog, const Graph& g1, Vertex v1, const Graph& g2,
                     Vertex v2) {
  NodeView a = collect_view(g1, v1, prog.radius);
  NodeView b = collect_view(g2, v2, prog.radius);
  if (!views_equivalent(a, b)) return true;
  return prog.decide(a) == prog.decide(b);
}

}  // namespace localds
