#include "localds/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "localds/minor.hpp"

namespace localds {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// mt19937_64 plus modulo draws: biased by a hair but stable across
// platforms, which matters more here than perfect uniformity.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

EdgeList path_edges(int n) {
  EdgeList edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return edges;
}

EdgeList cycle_edges(int n) {
  EdgeList edges = path_edges(n);
  edges.push_back({0, n - 1});
  return edges;
}

void triangulate(Rng& rng, int lo, int hi, EdgeList& edges) {
  if (hi - lo < 2) return;
  int k = rng.between(lo + 1, hi - 1);
  if (k - lo >= 2) edges.push_back({lo, k});
  if (hi - k >= 2) edges.push_back({k, hi});
  triangulate(rng, lo, k, edges);
  triangulate(rng, k, hi, edges);
}

// Attachable building blocks: corner vertices get identified with host
// vertices, everything else stays private to the piece.
struct PieceBlueprint {
  int n = 0;
  EdgeList edges;
  std::vector<Vertex> corners;
  std::vector<bool> is_center;
};

// Cycle plus every chord from the center: length = chord count.
PieceBlueprint fan_blueprint(int length) {
  PieceBlueprint p;
  p.n = length + 3;
  p.edges = cycle_edges(p.n);
  for (Vertex v = 2; v <= p.n - 2; ++v) p.edges.push_back({0, v});
  p.corners = {0, 1, p.n - 1};
  p.is_center = {true, false, false};
  return p;
}

// Two parallel paths of k columns closed by end rungs, so every vertex
// keeps degree two or more.  Chords run only between the paths: parallel
// rungs never cross, and an X pair inside one gap crosses only itself
// with all four cycle adjacencies present.
PieceBlueprint strip_blueprint(int columns, Rng& rng) {
  int k = columns;
  PieceBlueprint p;
  p.n = 2 * k;
  for (Vertex i = 0; i + 1 < k; ++i) {
    p.edges.push_back({i, i + 1});
    p.edges.push_back({k + i, k + i + 1});
  }
  p.edges.push_back({0, k});
  p.edges.push_back({k - 1, 2 * k - 1});
  for (Vertex i = 1; i + 1 < k; ++i)
    if (rng.chance(60)) p.edges.push_back({i, k + i});
  for (Vertex i = 0; i + 1 < k; ++i) {
    if (rng.chance(30)) {
      p.edges.push_back({i, k + i + 1});
      p.edges.push_back({i + 1, k + i});
    }
  }
  p.corners = {0, k - 1, k, 2 * k - 1};
  p.is_center = {false, false, false, false};
  return p;
}

bool chords_cross(std::pair<Vertex, Vertex> e, std::pair<Vertex, Vertex> f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
    return false;
  auto inside = [&](Vertex x) { return e.first < x && x < e.second; };
  return inside(f.first) != inside(f.second);
}

bool cycle_adjacent(int n, Vertex u, Vertex v) {
  int d = u < v ? v - u : u - v;
  return d == 1 || d == n - 1;
}

// Crossing chords must sit on a four-cycle of reference edges.
bool crossing_pair_allowed(int n, std::pair<Vertex, Vertex> e, std::pair<Vertex, Vertex> f) {
  auto [a, b] = e;
  auto [c, d] = f;
  bool first = cycle_adjacent(n, a, c) && cycle_adjacent(n, b, d);
  bool second = cycle_adjacent(n, a, d) && cycle_adjacent(n, b, c);
  return first || second;
}

Graph generate_type1(int n, Rng& rng) {
  EdgeList chords;
  std::vector<int> crossings;
  std::set<std::pair<Vertex, Vertex>> seen;
  int attempts = 4 * n;
  for (int it = 0; it < attempts; ++it) {
    Vertex u = rng.below(n);
    int span = rng.between(2, n - 2);
    Vertex v = (u + span) % n;
    std::pair<Vertex, Vertex> cand{std::min(u, v), std::max(u, v)};
    if (seen.count(cand)) continue;

    int partner = -1;
    bool ok = true;
    for (std::size_t i = 0; i < chords.size() && ok; ++i) {
      if (!chords_cross(cand, chords[i])) continue;
      if (partner >= 0 || crossings[i] > 0 || !crossing_pair_allowed(n, cand, chords[i]))
        ok = false;
      else
        partner = static_cast<int>(i);
    }
    if (!ok) continue;
    if (partner >= 0) crossings[partner] += 1;
    chords.push_back(cand);
    crossings.push_back(partner >= 0 ? 1 : 0);
    seen.insert(cand);
  }

  EdgeList edges = cycle_edges(n);
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph::from_edges(n, edges);
}

Graph generate_clique_pendant(int k) {
  EdgeList edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) edges.push_back({u, v});
  for (Vertex v = 1; v < k; ++v) {
    Vertex pendant = k + v - 1;
    edges.push_back({0, pendant});
    edges.push_back({v, pendant});
  }
  return Graph::from_edges(2 * k - 1, edges);
}

EdgeList connected_base(int n, Rng& rng) {
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(rng.below(v)), v});
  std::set<std::pair<Vertex, Vertex>> seen(edges.begin(), edges.end());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!seen.count({u, v}) && rng.chance(15)) {
        edges.push_back({u, v});
        seen.insert({u, v});
      }
  return edges;
}

// Corner sharing is legal only between fan centers, plus at most one
// strip corner on the same host vertex; fan side corners lock their
// vertex entirely.
struct HostSlot {
  bool side = false;
  bool strip = false;
  int centers = 0;
  bool untouched() const { return !side && !strip && centers == 0; }
};

Graph generate_augmentation(const GeneratorSpec& spec, Rng& rng) {
  int base_n = spec.base_size;
  EdgeList base = connected_base(base_n, rng);
  std::set<std::pair<Vertex, Vertex>> edge_set(base.begin(), base.end());

  std::vector<HostSlot> slots(base_n);
  int next_id = base_n;

  for (int piece = 0; piece < spec.pieces; ++piece) {
    PieceBlueprint bp;
    bool want_strip = false;
    std::vector<Vertex> target;
    bool placed = false;
    // piece shape is re-drawn per attempt so a crowded host can still
    // take whichever kind fits
    for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
      want_strip = base_n >= 4 && rng.chance(50);
      bp = want_strip ? strip_blueprint(rng.between(2, 4), rng) : fan_blueprint(rng.between(1, 4));
      target.assign(bp.corners.size(), -1);
      Bits taken(base_n);
      bool ok = true;
      for (std::size_t c = 0; c < bp.corners.size() && ok; ++c) {
        std::vector<Vertex> legal;
        for (Vertex v = 0; v < base_n; ++v) {
          if (taken.test(v)) continue;
          const HostSlot& s = slots[v];
          bool fits = bp.is_center[c] ? !s.side
                      : want_strip    ? !s.side && !s.strip
                                      : s.untouched();
          if (fits) legal.push_back(v);
        }
        if (legal.empty()) {
          ok = false;
        } else {
          target[c] = legal[rng.below(static_cast<int>(legal.size()))];
          taken.set(target[c]);
        }
      }
      placed = ok;
    }
    if (!placed)
      throw std::invalid_argument("augmentation: cannot place corners under the sharing rule");

    for (std::size_t c = 0; c < bp.corners.size(); ++c) {
      if (bp.is_center[c])
        slots[target[c]].centers += 1;
      else if (want_strip)
        slots[target[c]].strip = true;
      else
        slots[target[c]].side = true;
    }

    std::vector<Vertex> remap(bp.n, -1);
    for (std::size_t c = 0; c < bp.corners.size(); ++c) remap[bp.corners[c]] = target[c];
    for (Vertex v = 0; v < bp.n; ++v)
      if (remap[v] < 0) remap[v] = next_id++;
    for (auto [u, v] : bp.edges) {
      Vertex a = remap[u];
      Vertex b = remap[v];
      edge_set.insert({std::min(a, b), std::max(a, b)});
    }
  }

  EdgeList edges(edge_set.begin(), edge_set.end());
  return Graph::from_edges(next_id, edges);
}

Graph generate_random_filtered(const GeneratorSpec& spec, Rng& rng) {
  int n = spec.size;
  int percent = std::clamp(220 / n, 5, 50);
  for (int attempt = 0; attempt < 200; ++attempt) {
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.chance(percent)) edges.push_back({u, v});
    Graph g = Graph::from_edges(n, edges);
    if (!contains_k2t_minor(g, spec.minor_t).has_value()) return g;
  }
  throw std::runtime_error("random_filtered: retry budget exhausted");
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kTree: return "tree";
    case Family::kOuterplanar: return "outerplanar";
    case Family::kFan: return "fan";
    case Family::kStrip: return "strip";
    case Family::kType1: return "type1";
    case Family::kAugmentation: return "augmentation";
    case Family::kCliquePendant: return "clique_pendant";
    case Family::kRandomFiltered: return "random_filtered";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kTree, Family::kOuterplanar,
                   Family::kFan, Family::kStrip, Family::kType1, Family::kAugmentation,
                   Family::kCliquePendant, Family::kRandomFiltered}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family name: " + name);
}

Graph generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::kPath:
      require(spec.size >= 1, "path: size must be at least 1");
      return Graph::from_edges(spec.size, path_edges(spec.size));
    case Family::kCycle:
      require(spec.size >= 3, "cycle: size must be at least 3");
      return Graph::from_edges(spec.size, cycle_edges(spec.size));
    case Family::kTree: {
      require(spec.size >= 1, "tree: size must be at least 1");
      EdgeList edges;
      for (Vertex v = 1; v < spec.size; ++v)
        edges.push_back({static_cast<Vertex>(rng.below(v)), v});
      return Graph::from_edges(spec.size, edges);
    }
    case Family::kOuterplanar: {
      require(spec.size >= 3, "outerplanar: size must be at least 3");
      EdgeList edges = cycle_edges(spec.size);
      triangulate(rng, 0, spec.size - 1, edges);
      return Graph::from_edges(spec.size, edges);
    }
    case Family::kFan: {
      require(spec.size >= 1, "fan: length must be at least 1");
      PieceBlueprint bp = fan_blueprint(spec.size);
      return Graph::from_edges(bp.n, bp.edges);
    }
    case Family::kStrip: {
      require(spec.size >= 2, "strip: columns must be at least 2");
      PieceBlueprint bp = strip_blueprint(spec.size, rng);
      return Graph::from_edges(bp.n, bp.edges);
    }
    case Family::kType1:
      require(spec.size >= 4, "type1: size must be at least 4");
      return generate_type1(spec.size, rng);
    case Family::kAugmentation:
      require(spec.base_size >= 3, "augmentation: base_size must be at least 3");
      require(spec.pieces >= 0, "augmentation: pieces must be non-negative");
      return generate_augmentation(spec, rng);
    case Family::kCliquePendant:
      require(spec.size >= 2, "clique_pendant: clique size must be at least 2");
      return generate_clique_pendant(spec.size);
    case Family::kRandomFiltered:
      require(spec.size >= 1, "random_filtered: size must be at least 1");
      require(spec.size <= kDefaultMinorCap, "random_filtered: size exceeds checker cap");
      require(spec.minor_t >= 1, "random_filtered: minor_t must be positive");
      return generate_random_filtered(spec, rng);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace localds
