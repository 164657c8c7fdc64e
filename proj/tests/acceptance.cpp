// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// fails.  Tolerances and corpus sizes are pinned here on purpose — loosening
// them is a code change, not a flag.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "localds/algorithms.hpp"
#include "localds/config.hpp"
#include "localds/cuts.hpp"
#include "localds/exact.hpp"
#include "localds/generators.hpp"
#include "localds/graph.hpp"
#include "localds/local_sim.hpp"
#include "localds/minor.hpp"
#include "localds/report.hpp"
#include "support/builders.hpp"

using namespace localds;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

VertexSet all_vertices(const Graph& g) {
  std::vector<Vertex> ids(g.vertex_count());
  std::iota(ids.begin(), ids.end(), 0);
  return VertexSet(std::move(ids));
}

GeneratorSpec spec_of(Family family, int size, std::uint64_t seed = 0) {
  GeneratorSpec spec;
  spec.family = family;
  spec.size = size;
  spec.seed = seed;
  return spec;
}

// ring of triangles: 3-connected segments, so no local cuts anywhere
Graph triangle_band(int cycle_len) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < cycle_len; ++i) {
    const int base = 3 * i;
    const int next = 3 * ((i + 1) % cycle_len);
    for (int l = 0; l < 3; ++l) {
      edges.push_back({base + l, base + (l + 1) % 3});
      edges.push_back({base + l, next + l});
    }
  }
  return Graph::from_edges(3 * cycle_len, edges);
}

// small bases cannot host three attachments under the sharing rule, so
// sweeps must drop the combinations the generator rejects
bool generable(const GeneratorSpec& spec) {
  try {
    generate(spec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<GeneratorSpec> validity_specs() {
  std::vector<GeneratorSpec> specs;
  for (int n = 3; n <= 60; ++n) specs.push_back(spec_of(Family::kPath, n));
  for (int n = 3; n <= 60; ++n) specs.push_back(spec_of(Family::kCycle, n));
  for (int c = 1; c <= 40; ++c) specs.push_back(spec_of(Family::kFan, c));
  for (int c = 2; c <= 30; ++c) specs.push_back(spec_of(Family::kStrip, c));
  for (int k = 2; k <= 30; ++k) specs.push_back(spec_of(Family::kCliquePendant, k));
  for (int n = 4; n <= 60; ++n)
    for (std::uint64_t s = 1; s <= 8; ++s) specs.push_back(spec_of(Family::kTree, n, s));
  for (int n = 6; n <= 60; ++n)
    for (std::uint64_t s = 1; s <= 6; ++s) specs.push_back(spec_of(Family::kOuterplanar, n, s));
  for (int n = 6; n <= 60; ++n)
    for (std::uint64_t s = 1; s <= 6; ++s) specs.push_back(spec_of(Family::kType1, n, s));
  for (int base = 6; base <= 40; base += 2) {
    for (int pieces = 1; pieces <= 3; ++pieces) {
      for (std::uint64_t s = 1; s <= 3; ++s) {
        GeneratorSpec spec = spec_of(Family::kAugmentation, 1, s);
        spec.base_size = base;
        spec.pieces = pieces;
        if (generable(spec)) specs.push_back(spec);
      }
    }
  }
  for (int n = 5; n <= 14; ++n)
    for (std::uint64_t s = 1; s <= 60; ++s) specs.push_back(spec_of(Family::kRandomFiltered, n, s));
  return specs;
}

struct CertifiedInstance {
  Graph g;
  int t = 0;
  int opt_ds = 0;
};

// every generated instance up to `max_n` vertices whose class parameter the
// checker can pin down
std::vector<CertifiedInstance> certified_corpus(int max_n) {
  std::vector<GeneratorSpec> specs;
  for (int n = 3; n <= 25; ++n) specs.push_back(spec_of(Family::kPath, n));
  for (int n = 3; n <= 25; ++n) specs.push_back(spec_of(Family::kCycle, n));
  for (int c = 1; c <= 20; ++c) specs.push_back(spec_of(Family::kFan, c));
  for (int c = 2; c <= 12; ++c) specs.push_back(spec_of(Family::kStrip, c));
  for (int k = 2; k <= 13; ++k) specs.push_back(spec_of(Family::kCliquePendant, k));
  for (int n = 4; n <= 25; ++n)
    for (std::uint64_t s = 1; s <= 8; ++s) specs.push_back(spec_of(Family::kTree, n, s));
  for (int n = 6; n <= 25; ++n)
    for (std::uint64_t s = 1; s <= 8; ++s) specs.push_back(spec_of(Family::kOuterplanar, n, s));
  for (int n = 6; n <= 25; ++n)
    for (std::uint64_t s = 1; s <= 8; ++s) specs.push_back(spec_of(Family::kType1, n, s));
  for (int base = 6; base <= 12; base += 2) {
    for (int pieces = 1; pieces <= 2; ++pieces) {
      for (std::uint64_t s = 1; s <= 4; ++s) {
        GeneratorSpec spec = spec_of(Family::kAugmentation, 1, s);
        spec.base_size = base;
        spec.pieces = pieces;
        if (generable(spec)) specs.push_back(spec);
      }
    }
  }
  for (int n = 5; n <= 14; ++n)
    for (std::uint64_t s = 1; s <= 15; ++s) specs.push_back(spec_of(Family::kRandomFiltered, n, s));

  std::vector<CertifiedInstance> corpus;
  for (const GeneratorSpec& spec : specs) {
    const Graph g = generate(spec);
    if (g.vertex_count() > max_n) continue;
    int t = 0;
    try {
      t = certify_class(g, max_n);
    } catch (const std::exception&) {
      continue;  // checker refused within its budget; instance is not certified
    }
    corpus.push_back({g, t, mds_exact(g).size()});
  }
  return corpus;
}

Outcome criterion_validity() {
  Outcome out;
  const std::vector<GeneratorSpec> specs = validity_specs();
  const AlgorithmConfig defaults;
  long outputs = 0;
  long invalid = 0;
  for (const GeneratorSpec& spec : specs) {
    const Graph g = generate(spec);
    const VertexSet everyone = all_vertices(g);
    auto judge_ds = [&](const VertexSet& s) {
      ++outputs;
      if (!verify_dominating(g, s, everyone)) ++invalid;
    };
    auto judge_vc = [&](const VertexSet& s) {
      ++outputs;
      if (!verify_vertex_cover(g, s)) ++invalid;
    };
    judge_ds(algo1_mds(g, defaults).chosen);
    judge_ds(algo_3round(g).chosen);
    judge_ds(baseline_all(g));
    judge_vc(algo_mvc(g, defaults).chosen);
    judge_vc(algo_mvc_3round(g).chosen);
    if ((spec.family == Family::kPath || spec.family == Family::kTree) && g.vertex_count() >= 3) {
      judge_ds(baseline_degree2(g));
    }
  }
  out.ok = specs.size() >= 2000 && invalid == 0;
  std::ostringstream text;
  text << specs.size() << " instances, " << outputs << " outputs, " << invalid << " invalid";
  out.detail = text.str();
  return out;
}

Outcome criterion_3round_ratio(const std::vector<CertifiedInstance>& corpus) {
  Outcome out;
  int used = 0;
  int ratio_violations = 0;
  int round_violations = 0;
  double max_ratio = 0.0;
  for (const CertifiedInstance& inst : corpus) {
    if (inst.g.vertex_count() > 20) continue;
    ++used;
    const RunResult res = algo_3round(inst.g);
    if (res.chosen.size() > (2 * inst.t - 1) * inst.opt_ds) ++ratio_violations;
    if (res.rounds.rounds_used != 3) ++round_violations;
    if (inst.opt_ds > 0) {
      max_ratio = std::max(max_ratio, double(res.chosen.size()) / inst.opt_ds);
    }
  }
  out.ok = used >= 500 && ratio_violations == 0 && round_violations == 0;
  std::ostringstream text;
  text << used << " certified instances (n<=20), " << ratio_violations << " ratio / "
       << round_violations << " round violations, max observed ratio " << max_ratio;
  out.detail = text.str();
  return out;
}

Outcome criterion_pipeline_ratio(const std::vector<CertifiedInstance>& corpus) {
  Outcome out;
  const AlgorithmConfig defaults;
  const int bound = approximation_bound(1);
  int violations = 0;
  int fallbacks = 0;
  double max_ratio = 0.0;
  for (const CertifiedInstance& inst : corpus) {
    const RunResult res = algo1_mds(inst.g, defaults);
    if (res.fallback_used) ++fallbacks;
    if (res.chosen.size() > bound * inst.opt_ds) ++violations;
    if (inst.opt_ds > 0) {
      max_ratio = std::max(max_ratio, double(res.chosen.size()) / inst.opt_ds);
    }
  }
  out.ok = !corpus.empty() && violations == 0 && fallbacks == 0;
  std::ostringstream text;
  text << corpus.size() << " certified instances (n<=25), bound " << bound << "x, "
       << violations << " violations, max observed ratio " << max_ratio;
  out.detail = text.str();
  return out;
}

Outcome criterion_counting_bounds(const std::vector<CertifiedInstance>& corpus) {
  Outcome out;
  const AlgorithmConfig defaults;
  int x_violations = 0;
  int i_violations = 0;
  int max_x = 0;
  int max_i = 0;
  for (const CertifiedInstance& inst : corpus) {
    const TwinReduction tw = remove_true_twins(inst.g);
    const CutSets cs = enumerate_cut_sets(tw.reduced, defaults);
    if (cs.one_cut.size() > 6 * inst.opt_ds) ++x_violations;
    if (cs.interesting.size() > 44 * inst.opt_ds) ++i_violations;
    max_x = std::max(max_x, cs.one_cut.size());
    max_i = std::max(max_i, cs.interesting.size());
  }
  out.ok = !corpus.empty() && x_violations == 0 && i_violations == 0;
  std::ostringstream text;
  text << corpus.size() << " instances, |X|<=6*opt " << x_violations << " / |I|<=44*opt "
       << i_violations << " violations (largest X " << max_x << ", I " << max_i << ")";
  out.detail = text.str();
  return out;
}

Outcome criterion_oracle_equivalence() {
  Outcome out;
  std::mt19937 rng(424242);
  const int cases = 10000;
  int disagreements = 0;
  for (int i = 0; i < cases; ++i) {
    const int n = 1 + int(rng() % 12);
    const int percent = 10 + int(rng() % 51);
    const Graph g = testsupport::random_graph(n, percent, rng);
    if (mds_exact(g) != mds_exact_by_enumeration(g)) ++disagreements;
    if (mvc_exact(g) != mvc_exact_by_enumeration(g)) ++disagreements;
  }
  out.ok = disagreements == 0;
  std::ostringstream text;
  text << cases << " random graphs (n<=12), " << disagreements
       << " solver disagreements on exact sets";
  out.detail = text.str();
  return out;
}

Outcome criterion_structural_bounds() {
  Outcome out;
  std::mt19937 rng(171717);
  int ore_cases = 0;
  int ore_violations = 0;
  while (ore_cases < 1000) {
    const int n = 3 + int(rng() % 16);
    const int percent = 20 + int(rng() % 50);
    Graph g = testsupport::random_graph(n, percent, rng);
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 0) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
    }
    g = Graph::from_edges(n, edges);
    ++ore_cases;
    if (2 * mds_exact(g).size() > n) ++ore_violations;
  }

  int union_cases = 0;
  int union_violations = 0;
  while (union_cases < 1000) {
    const int n = 3 + int(rng() % 10);
    const Graph g = testsupport::random_graph(n, 30, rng);
    const VertexSet everyone = all_vertices(g);
    std::vector<Vertex> b1;
    std::vector<Vertex> b2;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2 == 0) b1.push_back(v);
      if (rng() % 2 == 0) b2.push_back(v);
    }
    DominationInstance left{g, VertexSet(b1), everyone};
    DominationInstance right{g, VertexSet(b2), everyone};
    DominationInstance both{g, set_union(left.targets, right.targets), everyone};
    ++union_cases;
    if (mds_subset_exact(both).size() >
        mds_subset_exact(left).size() + mds_subset_exact(right).size()) {
      ++union_violations;
    }
  }

  out.ok = ore_violations == 0 && union_violations == 0;
  std::ostringstream text;
  text << ore_cases << " half-count cases (" << ore_violations << " failed), " << union_cases
       << " target-union cases (" << union_violations << " failed)";
  out.detail = text.str();
  return out;
}

Outcome criterion_goldens() {
  Outcome out;
  std::vector<std::string> broken;
  const AlgorithmConfig defaults;

  const Graph c6 = testsupport::cycle_graph(6);
  if (algo1_mds(c6, defaults).chosen.size() != 6) broken.push_back("hexagon pipeline size");
  if (mds_exact(c6).size() != 2) broken.push_back("hexagon optimum");
  if (algo_3round(c6).chosen.size() != 6) broken.push_back("hexagon 3-round size");
  const CutSets c6_cuts = enumerate_cut_sets(c6, defaults);
  if (c6_cuts.interesting != all_vertices(c6)) broken.push_back("hexagon interesting set");
  for (Vertex v = 0; v < 6; ++v) {
    const auto w = is_r_interesting(c6, v, defaults.r2);
    const VertexSet antipodal(std::vector<Vertex>{v, (v + 3) % 6});
    if (!w || !(w->cut.members == antipodal)) broken.push_back("hexagon witness cut");
  }

  if (algo_3round(testsupport::star_graph(5)).chosen.size() != 1) broken.push_back("star 3-round size");

  const Graph cp = generate(spec_of(Family::kCliquePendant, 6));
  const CutSets cp_cuts = enumerate_cut_sets(cp, defaults);
  if (!cp_cuts.interesting.empty()) broken.push_back("pendant-clique interesting set");
  if (mds_exact(cp).size() != 1) broken.push_back("pendant-clique optimum");

  const Graph p7 = testsupport::path_graph(7);
  const VertexSet inner(std::vector<Vertex>{1, 2, 3, 4, 5});
  if (!(enumerate_cut_sets(p7, defaults).one_cut == inner)) broken.push_back("path 1-cut set");

  out.ok = broken.empty();
  if (broken.empty()) {
    out.detail = "hexagon, star, pendant-clique, and path values all match";
  } else {
    std::ostringstream text;
    text << broken.size() << " golden value(s) off:";
    for (const std::string& b : broken) text << " [" << b << "]";
    out.detail = text.str();
  }
  return out;
}

Outcome criterion_locality_determinism() {
  Outcome out;
  const NodeProgram programs[2] = {one_cut_program(2), interesting_program(2)};

  // interior windows of paths and cycles relabel to the same ranked view;
  // every pair below must be genuinely equivalent, not vacuously passed
  std::vector<std::tuple<Graph, Vertex, Graph, Vertex>> pairs;
  for (int k = 11; k <= 30; ++k) {
    for (int shift = 1; shift <= 3; ++shift) {
      pairs.emplace_back(testsupport::path_graph(k), k / 2, testsupport::path_graph(k + shift),
                         k / 2 + shift);
    }
  }
  for (int n = 12; n <= 36; ++n) {
    pairs.emplace_back(testsupport::cycle_graph(n), 5, testsupport::cycle_graph(n), n - 6);
    pairs.emplace_back(testsupport::path_graph(n), 5, testsupport::cycle_graph(n), 5);
  }

  int equivalent_pairs = 0;
  int locality_failures = 0;
  bool all_equivalent = true;
  for (const auto& [g1, v1, g2, v2] : pairs) {
    bool this_pair_equivalent = true;
    for (const NodeProgram& prog : programs) {
      const NodeView a = collect_view(g1, v1, prog.radius);
      const NodeView b = collect_view(g2, v2, prog.radius);
      if (!views_equivalent(a, b)) this_pair_equivalent = false;
      if (!verify_locality(prog, g1, v1, g2, v2)) ++locality_failures;
    }
    if (this_pair_equivalent) ++equivalent_pairs;
    all_equivalent = all_equivalent && this_pair_equivalent;
  }

  ExperimentPlan plan;
  plan.certify = true;
  auto add = [&plan](GeneratorSpec spec, const std::string& algo) {
    PlanItem item;
    item.spec = spec;
    item.algorithm = algo;
    plan.items.push_back(item);
  };
  add(spec_of(Family::kCycle, 6), "algo_3round");
  add(spec_of(Family::kTree, 13, 5), "algo1_mds");
  add(spec_of(Family::kStrip, 5), "algo_mvc");
  add(spec_of(Family::kFan, 4), "algo_mvc_3round");
  add(spec_of(Family::kOuterplanar, 12, 11), "algo2_mds");
  std::ostringstream first;
  std::ostringstream second;
  write_report(first, run_plan(plan), false);
  write_report(second, run_plan(plan), false);
  const bool identical = !first.str().empty() && first.str() == second.str();

  out.ok = equivalent_pairs >= 100 && all_equivalent && locality_failures == 0 && identical;
  std::ostringstream text;
  text << equivalent_pairs << " equivalent view pairs x 2 programs, " << locality_failures
       << " locality failures; reports " << (identical ? "byte-identical" : "DIFFER");
  out.detail = text.str();
  return out;
}

Outcome criterion_fallback() {
  Outcome out;
  const Graph band = triangle_band(20);
  const VertexSet everyone = all_vertices(band);

  AlgorithmConfig tight;
  tight.r1 = 2;
  tight.r2 = 2;
  tight.diam_cap = 5;
  const RunResult far_apart = algo1_mds(band, tight);
  const bool diameter_path = far_apart.fallback_used &&
                             verify_dominating(band, far_apart.chosen, everyone);

  const RunResult oversized = algo1_mds(band);  // residual component exceeds the solver cap
  const bool cap_path = oversized.fallback_used &&
                        verify_dominating(band, oversized.chosen, everyone);

  const RunResult cover = algo_mvc(band, tight);
  const bool cover_path = cover.fallback_used && verify_vertex_cover(band, cover.chosen);

  const ReportRow row = run_one(band, "algo1_mds", tight, false, kDefaultExactCap);
  const ReportSummary summary = summarize({row});
  const bool flagged = row.fallback && row.valid && summary.guarantee_voided;

  out.ok = diameter_path && cap_path && cover_path && flagged;
  std::ostringstream text;
  text << "diameter fallback " << (diameter_path ? "ok" : "BROKEN") << ", cap fallback "
       << (cap_path ? "ok" : "BROKEN") << ", cover fallback " << (cover_path ? "ok" : "BROKEN")
       << ", report " << (flagged ? "flags voided guarantee" : "MISSES the flag");
  out.detail = text.str();
  return out;
}

}  // namespace

int main() {
  std::vector<CertifiedInstance> small;   // n <= 20
  std::vector<CertifiedInstance> wide;    // n <= 25
  {
    wide = certified_corpus(25);
    for (const CertifiedInstance& inst : wide) {
      if (inst.g.vertex_count() <= 20) small.push_back(inst);
    }
  }

  struct Criterion {
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"validity of every output", [] { return criterion_validity(); }},
      {"3-round (2t-1) ratio", [&] { return criterion_3round_ratio(small); }},
      {"pipeline ratio bound", [&] { return criterion_pipeline_ratio(wide); }},
      {"cut-set counting bounds", [&] { return criterion_counting_bounds(wide); }},
      {"exact solver agreement", [] { return criterion_oracle_equivalence(); }},
      {"structural bounds", [] { return criterion_structural_bounds(); }},
      {"golden micro-instances", [] { return criterion_goldens(); }},
      {"locality and determinism", [] { return criterion_locality_determinism(); }},
      {"fallback accounting", [] { return criterion_fallback(); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome result = criteria[i].run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!result.ok) ++failed;
    std::printf("%s  %zu. %s: %s (%.2fs)\n", result.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].label, result.detail.c_str(), secs);
  }
  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
  }
  return failed == 0 ? 0 : 1;
}
