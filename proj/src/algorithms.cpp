#include "localds/algorithms.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "localds/cuts.hpp"
#include "localds/exact.hpp"

namespace localds {

namespace {

// Host ids -> local ids of a collected view.  original_ids is strictly
// increasing, so binary search works.  Vertices outside the view are
// dropped; callers only pass sets the view provably contains.
VertexSet to_view_ids(const NodeView& view, const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.ids().size());
  for (Vertex v : s) {
    auto it = std::lower_bound(view.original_ids.begin(), view.original_ids.end(), v);
    if (it != view.original_ids.end() && *it == v)
      out.push_back(static_cast<Vertex>(it - view.original_ids.begin()));
  }
  return VertexSet(std::move(out));
}

VertexSet from_view_ids(const NodeView& view, const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.ids().size());
  for (Vertex v : s) out.push_back(view.original_ids[v]);
  return VertexSet(std::move(out));
}

void fill_budget_transcript(RunResult& res, int n, const AlgorithmConfig& cfg) {
  res.rounds.rounds_used = n > 0 ? cfg.round_budget() : 0;
  res.rounds.per_vertex_radius.assign(static_cast<std::size_t>(n), cfg.round_budget());
}

// Dominating-set pipeline on the twin-reduced graph.  Picks are collected in
// reduced ids and translated to original ids at the very end.
RunResult run_mds_pipeline(const Graph& g, const AlgorithmConfig& cfg) {
  cfg.validate();
  RunResult res;
  fill_budget_transcript(res, g.vertex_count(), cfg);
  if (g.vertex_count() == 0) return res;

  const TwinReduction tw = remove_true_twins(g);
  const Graph& h = tw.reduced;
  const int nh = h.vertex_count();

  const CutSets cuts = enumerate_cut_sets(h, cfg);
  const Bits x_bits = cuts.one_cut.to_bits(nh);
  const Bits y_bits = x_bits | cuts.interesting.to_bits(nh);
  const Bits covered = closed_neighborhood_bits(h, y_bits);

  // Settled vertices never reach the component phase: the cut picks
  // themselves plus dominated vertices all of whose neighbors are dominated.
  Bits settled = y_bits;
  for (Vertex v = 0; v < nh; ++v) {
    if (settled.test(v) || !covered.test(v)) continue;
    if (h.closed_mask(v).is_subset_of(covered)) settled.set(v);
  }

  std::vector<std::pair<Vertex, Phase>> picks;
  for (Vertex v : cuts.one_cut) picks.emplace_back(v, Phase::kOneCut);
  for (Vertex v : cuts.interesting)
    if (!x_bits.test(v)) picks.emplace_back(v, Phase::kInteresting);

  for (const VertexSet& comp : components_within(h, ~settled)) {
    std::vector<Vertex> uncovered;
    for (Vertex v : comp)
      if (!covered.test(v)) uncovered.push_back(v);
    const VertexSet targets(std::move(uncovered));

    const std::optional<int> wd = weak_diameter(h, comp);
    if (!wd.has_value() || *wd > cfg.diam_cap) {
      res.fallback_used = true;
      for (Vertex v : targets) picks.emplace_back(v, Phase::kFallback);
      continue;
    }
    if (targets.empty()) continue;

    // The lowest-id component member gathers everything the exact solve can
    // touch: the component spans <= diam_cap hops around it and candidate
    // dominators N[targets] sit inside the component (a vertex adjacent to
    // an undominated target can be neither a cut pick nor settled).  The
    // instance is induced on the component so the exact-phase cap is a
    // statement about component size, not view size.
    const Vertex leader = comp.front();
    const NodeView view = collect_view(h, leader, cfg.diam_cap + 2);
    const InducedSubgraph sub = induced_subgraph(view.view, to_view_ids(view, comp));
    const auto to_sub = [&](const VertexSet& s) {
      std::vector<Vertex> out;
      for (Vertex v : to_view_ids(view, s)) {
        const Vertex w = sub.from_original[v];
        if (w >= 0) out.push_back(w);
      }
      return VertexSet(std::move(out));
    };
    DominationInstance inst;
    inst.graph = sub.graph;
    inst.targets = to_sub(targets);
    inst.allowed = to_sub(closed_neighborhood(h, targets));
    try {
      std::vector<Vertex> lifted;
      for (Vertex v : mds_subset_exact(inst))
        lifted.push_back(view.original_ids[sub.to_original[v]]);
      for (Vertex v : VertexSet(std::move(lifted))) picks.emplace_back(v, Phase::kBrute);
    } catch (const SizeCapExceeded&) {
      // A component too large to solve exactly is treated like one too wide
      // to gather: guarantees are off but the output stays dominating.
      res.fallback_used = true;
      for (Vertex v : targets) picks.emplace_back(v, Phase::kFallback);
    }
  }

  std::vector<Vertex> chosen;
  chosen.reserve(picks.size());
  for (const auto& [v, phase] : picks) {
    const Vertex orig = tw.kept[v];
    if (res.phase_of.emplace(orig, phase).second) chosen.push_back(orig);
  }
  res.chosen = VertexSet(std::move(chosen));
  return res;
}

// Vertex-cover pipeline.  Runs on the graph as given: twin classes may not
// share cover membership, so there is no reduction step.
RunResult run_mvc_pipeline(const Graph& g, const AlgorithmConfig& cfg) {
  cfg.validate();
  RunResult res;
  const int n = g.vertex_count();
  fill_budget_transcript(res, n, cfg);
  if (n == 0) return res;

  std::vector<Vertex> one_cut;
  for (Vertex v = 0; v < n; ++v)
    if (is_local_1_cut(g, v, cfg.r1)) one_cut.push_back(v);
  const VertexSet x(std::move(one_cut));
  const Bits x_bits = x.to_bits(n);
  const VertexSet two_cut = local_2_cut_vertices(g, cfg.r2);
  const Bits s0 = x_bits | two_cut.to_bits(n);

  // A vertex all of whose edges already have their other endpoint picked
  // contributes nothing further; isolated vertices fall out here too.
  Bits settled = s0;
  for (Vertex v = 0; v < n; ++v) {
    if (settled.test(v)) continue;
    bool all_covered = true;
    for (Vertex w : g.neighbors(v))
      if (!s0.test(w)) {
        all_covered = false;
        break;
      }
    if (all_covered) settled.set(v);
  }

  std::vector<std::pair<Vertex, Phase>> picks;
  for (Vertex v : x) picks.emplace_back(v, Phase::kOneCut);
  for (Vertex v : two_cut)
    if (!x_bits.test(v)) picks.emplace_back(v, Phase::kInteresting);

  for (const VertexSet& comp : components_within(g, ~settled)) {
    const std::optional<int> wd = weak_diameter(g, comp);
    if (!wd.has_value() || *wd > cfg.diam_cap) {
      res.fallback_used = true;
      for (Vertex v : comp) picks.emplace_back(v, Phase::kFallback);
      continue;
    }
    // Every edge between the component and the rest of the graph is already
    // covered, so an exact cover of the induced component finishes the job.
    const Vertex leader = comp.front();
    const NodeView view = collect_view(g, leader, cfg.diam_cap + 2);
    const InducedSubgraph sub = induced_subgraph(view.view, to_view_ids(view, comp));
    try {
      std::vector<Vertex> lifted;
      for (Vertex v : mvc_exact(sub.graph)) lifted.push_back(sub.to_original[v]);
      for (Vertex v : from_view_ids(view, VertexSet(std::move(lifted))))
        picks.emplace_back(v, Phase::kBrute);
    } catch (const SizeCapExceeded&) {
      res.fallback_used = true;
      for (Vertex v : comp) picks.emplace_back(v, Phase::kFallback);
    }
  }

  std::vector<Vertex> chosen;
  chosen.reserve(picks.size());
  for (const auto& [v, phase] : picks) {
    if (res.phase_of.emplace(v, phase).second) chosen.push_back(v);
  }
  res.chosen = VertexSet(std::move(chosen));
  return res;
}

// Membership program behind algo_3round.  The twin test is only sound for
// vertices within distance 1 of the root: their candidate twins sit at
// distance <= 2, and the radius-3 view still holds those vertices' complete
// neighborhoods.
NodeProgram no_single_dominator_program() {
  NodeProgram prog;
  prog.name = "no_single_dominator";
  prog.radius = 3;
  prog.decide = [](const NodeView& view) {
    const Graph& w = view.view;
    const Vertex root = view.root_local;
    const auto kept = [&w](Vertex x) {
      // True twins are adjacent, so the class minimum is a neighbor.
      for (Vertex u : w.neighbors(x))
        if (u < x && w.closed_mask(u) == w.closed_mask(x)) return false;
      return true;
    };

    NodeOutput out;
    if (!kept(root)) return out;
    for (Vertex u : w.neighbors(root)) {
      if (!kept(u)) continue;
      bool dominates_root_hood = true;
      const Bits& nu = w.closed_mask(u);
      for (Vertex x : w.neighbors(root)) {
        if (!kept(x)) continue;
        if (!nu.test(x)) {
          dominates_root_hood = false;
          break;
        }
      }
      if (dominates_root_hood) return out;
    }
    out.member = true;
    return out;
  };
  return prog;
}

// Membership program behind algo_mvc_3round.  Local ids are rank-ordered by
// original id, so the < below picks the lower endpoint of an isolated edge.
NodeProgram edge_core_program() {
  NodeProgram prog;
  prog.name = "edge_core";
  prog.radius = 3;
  prog.decide = [](const NodeView& view) {
    const Graph& w = view.view;
    const Vertex root = view.root_local;
    NodeOutput out;
    if (w.degree(root) >= 2) {
      out.member = true;
    } else if (w.degree(root) == 1) {
      const Vertex nb = w.neighbors(root)[0];
      if (w.degree(nb) == 1 && root < nb) out.member = true;
    }
    return out;
  };
  return prog;
}

RunResult run_as_program(const Graph& g, const NodeProgram& prog) {
  LocalRun run = run_local(g, prog);
  RunResult res;
  res.chosen = std::move(run.chosen);
  for (Vertex v : res.chosen) res.phase_of.emplace(v, Phase::kBrute);
  res.rounds = std::move(run.transcript);
  return res;
}

}  // namespace

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::kOneCut: return "one_cut";
    case Phase::kInteresting: return "interesting";
    case Phase::kBrute: return "brute";
    case Phase::kFallback: return "fallback";
  }
  return "unknown";
}

RunResult algo1_mds(const Graph& g, const AlgorithmConfig& cfg) { return run_mds_pipeline(g, cfg); }

RunResult algo2_mds(const Graph& g, const ControlConfig& cfg) {
  cfg.validate();
  return run_mds_pipeline(g, cfg.to_algorithm_config());
}

int approximation_bound(int dimension) {
  if (dimension < 1) throw std::invalid_argument("bound: dimension must be >= 1");
  return 25 * dimension + 26;
}

RunResult algo_3round(const Graph& g) { return run_as_program(g, no_single_dominator_program()); }

RunResult algo_mvc(const Graph& g, const AlgorithmConfig& cfg) { return run_mvc_pipeline(g, cfg); }

RunResult algo_mvc_3round(const Graph& g) { return run_as_program(g, edge_core_program()); }

VertexSet baseline_degree2(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n - 1 || connected_components(g).size() != 1)
    throw std::invalid_argument("baseline: input must be a tree with at least 3 vertices");
  std::vector<Vertex> internal;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 2) internal.push_back(v);
  return VertexSet(std::move(internal));
}

VertexSet baseline_all(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return VertexSet(std::move(all));
}

}  // namespace localds
