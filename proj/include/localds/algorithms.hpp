#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "localds/config.hpp"
#include "localds/graph.hpp"
#include "localds/local_sim.hpp"

namespace localds {

// Which pipeline stage put a vertex into the output.
enum class Phase { kOneCut, kInteresting, kBrute, kFallback };
const char* phase_name(Phase p);

// Exact rational, kept reduced.  den is always positive.
struct Ratio {
  long long num = 0;
  long long den = 1;

  static Ratio of(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("ratio: denominator must be positive");
    const long long g = std::gcd(num, den);
    return Ratio{num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Ratio&) const = default;
};

struct RunResult {
  VertexSet chosen;                  // original-graph ids
  std::map<Vertex, Phase> phase_of;  // one entry per chosen vertex
  RoundTranscript rounds;
  bool fallback_used = false;
  // Left empty by the algorithms; the reporting layer fills it when an
  // exact solve is affordable.
  std::optional<Ratio> ratio_vs_exact;
};

// Cut-based dominating-set pipeline: true-twin reduction, 1-cut vertices at
// radius r1, interesting vertices at radius r2, then an exact solve per
// residual component (or a whole-component fallback past diam_cap).
RunResult algo1_mds(const Graph& g, const AlgorithmConfig& cfg = {});

// Same pipeline with radii derived from a dimension/level parameterization
// instead of being given directly.  Nothing about the input class is
// consumed by the node programs.
struct ControlConfig {
  int dimension = 1;
  int one_cut_level = 5;
  int two_cut_level = 8;
  int diam_cap = 40;

  AlgorithmConfig to_algorithm_config() const {
    AlgorithmConfig cfg;
    cfg.r1 = one_cut_level + 2;
    cfg.r2 = two_cut_level + 5;
    cfg.diam_cap = diam_cap;
    return cfg;
  }
  void validate() const {
    if (dimension < 1) throw std::invalid_argument("config: dimension must be >= 1");
    to_algorithm_config().validate();
  }
};
RunResult algo2_mds(const Graph& g, const ControlConfig& cfg = {});

// Guaranteed approximation ratio of the pipeline at a given dimension:
// 3(d+1) one-cut vertices + 22(d+1) interesting vertices + 1, per optimum
// vertex, i.e. 25d + 26.
int approximation_bound(int dimension);

// Radius-3 program: after true-twin reduction, keep exactly the vertices
// whose closed neighborhood no single other vertex dominates.
RunResult algo_3round(const Graph& g);

// Vertex-cover variant of the pipeline: no twin reduction (collapsing twins
// is only sound for domination), step 3 takes every vertex of a minimal
// r2-local 2-cut, and residual components get exact vertex covers.
RunResult algo_mvc(const Graph& g, const AlgorithmConfig& cfg = {});

// Radius-3 vertex-cover program: every vertex of degree >= 2 plus the
// lower endpoint of each isolated edge.
RunResult algo_mvc_3round(const Graph& g);

// All internal vertices of a tree.  Throws unless g is a tree with >= 3
// vertices.
VertexSet baseline_degree2(const Graph& g);

// Every vertex; the do-nothing yardstick.
VertexSet baseline_all(const Graph& g);

}  // namespace localds
