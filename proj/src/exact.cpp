#include "localds/exact.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace localds {

namespace {

constexpr Bits::size_type knpos = Bits::npos;

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap)
    throw SizeCapExceeded(std::string(what) + ": graph has " +
                          std::to_string(g.vertex_count()) + " vertices, cap is " +
                          std::to_string(cap));
}

// Generic minimum set cover over a bit universe.  Candidates are indexed in
// the order that defines lexicographic preference (ascending vertex id).
struct CoverProblem {
  int item_count = 0;
  Bits all_items;
  std::vector<Bits> cover;                 // candidate -> items it covers
  std::vector<std::vector<int>> coverers;  // item -> candidate indices, ascending
  std::vector<Bits> reach;                 // item -> union of cover over its coverers

  void finalize() {
    coverers.assign(item_count, {});
    reach.assign(item_count, Bits(item_count));
    for (int c = 0; c < static_cast<int>(cover.size()); ++c)
      for (auto i = cover[c].find_first(); i != knpos; i = cover[c].find_next(i)) {
        coverers[i].push_back(c);
        reach[i] |= cover[c];
      }
  }
};

class CoverSearch {
 public:
  explicit CoverSearch(const CoverProblem& p) : p_(p) {}

  // Least k <= budget such that candidates with index >= min_index can
  // cover everything outside `covered`; budget+1 when impossible.
  int min_size(const Bits& covered, int min_index, int budget) {
    Bits uncovered = p_.all_items - covered;
    if (uncovered.none()) return 0;
    if (budget <= 0) return budget + 1;
    if (lower_bound(uncovered) > budget) return budget + 1;
    int item = static_cast<int>(uncovered.find_first());
    int best = budget + 1;
    for (int c : p_.coverers[item]) {
      if (c < min_index) continue;
      int sub = min_size(covered | p_.cover[c], min_index, best - 2);
      if (1 + sub < best) best = 1 + sub;
    }
    return best;
  }

  // Lex-smallest solution of exactly the optimal size; empty universe gives
  // the empty selection.
  std::vector<int> lex_min() {
    for (int i = 0; i < p_.item_count; ++i)
      if (p_.coverers[i].empty()) return {-1};  // infeasible marker
    int opt = min_size(Bits(p_.item_count), 0, greedy_size());
    std::vector<int> chosen;
    Bits covered(p_.item_count);
    int from = 0;
    while (static_cast<int>(chosen.size()) < opt) {
      const int slack = opt - static_cast<int>(chosen.size()) - 1;
      for (int c = from; c < static_cast<int>(p_.cover.size()); ++c) {
        if ((p_.cover[c] - covered).none()) continue;  // contributes nothing new
        if (min_size(covered | p_.cover[c], c + 1, slack) <= slack) {
          chosen.push_back(c);
          covered |= p_.cover[c];
          from = c + 1;
          break;
        }
      }
    }
    return chosen;
  }

 private:
  // Items no single candidate covers jointly need distinct dominators.
  int lower_bound(const Bits& uncovered) const {
    Bits scratch = uncovered;
    int count = 0;
    for (auto i = scratch.find_first(); i != knpos; i = scratch.find_first()) {
      ++count;
      scratch -= p_.reach[i];
    }
    return count;
  }

  // Upper bound seeding the search: repeatedly take the candidate covering
  // the most uncovered items, lowest index on ties.
  int greedy_size() const {
    Bits covered(p_.item_count);
    int size = 0;
    while ((p_.all_items - covered).any()) {
      int best = -1;
      std::size_t best_gain = 0;
      for (int c = 0; c < static_cast<int>(p_.cover.size()); ++c) {
        std::size_t gain = (p_.cover[c] - covered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      if (best < 0) return size + p_.item_count;  // infeasible; caller checks anyway
      covered |= p_.cover[best];
      ++size;
    }
    return size;
  }

  const CoverProblem& p_;
};

CoverProblem domination_problem(const Graph& g, const VertexSet& targets,
                                const VertexSet& allowed) {
  CoverProblem p;
  p.item_count = targets.size();
  p.all_items = Bits(p.item_count);
  p.all_items.set();
  std::vector<int> item_of(g.vertex_count(), -1);
  for (int i = 0; i < targets.size(); ++i) item_of[targets.ids()[i]] = i;
  for (Vertex w : allowed) {
    Bits c(p.item_count);
    const Bits& nb = g.closed_mask(w);
    for (auto v = nb.find_first(); v != knpos; v = nb.find_next(v))
      if (item_of[v] >= 0) c.set(item_of[v]);
    p.cover.push_back(std::move(c));
  }
  p.finalize();
  return p;
}

VertexSet solve_domination(const DominationInstance& inst, int cap, const char* what) {
  check_cap(inst.graph, cap, what);
  for (Vertex v : inst.targets) inst.graph.check_vertex(v);
  for (Vertex v : inst.allowed) inst.graph.check_vertex(v);
  if (inst.targets.empty()) return {};
  CoverProblem p = domination_problem(inst.graph, inst.targets, inst.allowed);
  CoverSearch search(p);
  auto chosen = search.lex_min();
  if (chosen.size() == 1 && chosen[0] == -1)
    throw InfeasibleInstance(std::string(what) + ": some target has no allowed dominator");
  std::vector<Vertex> ids;
  for (int c : chosen) ids.push_back(inst.allowed.ids()[c]);
  return VertexSet(std::move(ids));
}

VertexSet full_vertex_set(const Graph& g) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return VertexSet(std::move(all));
}

// First k-combination of `pool` (positions ascending, so lexicographic on
// the id vectors) that satisfies `good`.
template <typename Good>
std::optional<std::vector<Vertex>> first_combination(const std::vector<Vertex>& pool, int k,
                                                     Good&& good) {
  const int n = static_cast<int>(pool.size());
  std::vector<int> stack;  // chosen positions
  std::vector<Vertex> picked;
  int start = 0;
  while (true) {
    if (static_cast<int>(stack.size()) == k) {
      picked.clear();
      for (int pos : stack) picked.push_back(pool[pos]);
      if (good(picked)) return picked;
      if (stack.empty()) return std::nullopt;  // k == 0 and the empty pick failed
      start = stack.back() + 1;
      stack.pop_back();
      continue;
    }
    if (start < n && n - start >= k - static_cast<int>(stack.size())) {
      stack.push_back(start);
      ++start;
    } else {
      if (stack.empty()) return std::nullopt;
      start = stack.back() + 1;
      stack.pop_back();
    }
  }
}

VertexSet solve_by_enumeration(const DominationInstance& inst, int cap, const char* what) {
  check_cap(inst.graph, cap, what);
  for (Vertex v : inst.targets) inst.graph.check_vertex(v);
  for (Vertex v : inst.allowed) inst.graph.check_vertex(v);
  if (inst.targets.empty()) return {};
  const Graph& g = inst.graph;
  Bits want = inst.targets.to_bits(g.vertex_count());
  Bits reachable = closed_neighborhood_bits(g, inst.allowed.to_bits(g.vertex_count()));
  if ((want - reachable).any())
    throw InfeasibleInstance(std::string(what) + ": some target has no allowed dominator");
  auto covers = [&](const std::vector<Vertex>& pick) {
    Bits got(g.vertex_count());
    for (Vertex w : pick) got |= g.closed_mask(w);
    return (want - got).none();
  };
  const auto& pool = inst.allowed.ids();
  for (int k = 1; k <= static_cast<int>(pool.size()); ++k) {
    auto hit = first_combination(pool, k, covers);
    if (hit) return VertexSet(*hit);
  }
  return inst.allowed;  // unreachable: the whole pool was just checked feasible
}

}  // namespace

VertexSet mds_exact(const Graph& g, int cap) {
  auto all = full_vertex_set(g);
  return solve_domination({g, all, all}, cap, "mds_exact");
}

VertexSet mds_subset_exact(const DominationInstance& inst, int cap) {
  return solve_domination(inst, cap, "mds_subset_exact");
}

VertexSet mvc_exact(const Graph& g, int cap) {
  check_cap(g, cap, "mvc_exact");
  auto edges = g.edges();
  if (edges.empty()) return {};
  CoverProblem p;
  p.item_count = static_cast<int>(edges.size());
  p.all_items = Bits(p.item_count);
  p.all_items.set();
  p.cover.assign(g.vertex_count(), Bits(p.item_count));
  for (int e = 0; e < p.item_count; ++e) {
    p.cover[edges[e].first].set(e);
    p.cover[edges[e].second].set(e);
  }
  p.finalize();
  CoverSearch search(p);
  auto chosen = search.lex_min();  // never infeasible: endpoints exist
  return VertexSet(std::vector<Vertex>(chosen.begin(), chosen.end()));
}

VertexSet mds_exact_by_enumeration(const Graph& g, int cap) {
  auto all = full_vertex_set(g);
  return solve_by_enumeration({g, all, all}, cap, "mds_exact_by_enumeration");
}

VertexSet mds_subset_exact_by_enumeration(const DominationInstance& inst, int cap) {
  return solve_by_enumeration(inst, cap, "mds_subset_exact_by_enumeration");
}

VertexSet mvc_exact_by_enumeration(const Graph& g, int cap) {
  check_cap(g, cap, "mvc_exact_by_enumeration");
  auto edges = g.edges();
  if (edges.empty()) return {};
  auto covers = [&](const std::vector<Vertex>& pick) {
    Bits in(g.vertex_count());
    for (Vertex v : pick) in.set(v);
    for (auto [u, v] : edges)
      if (!in.test(u) && !in.test(v)) return false;
    return true;
  };
  auto pool = full_vertex_set(g).ids();
  for (int k = 1; k <= g.vertex_count(); ++k) {
    auto hit = first_combination(pool, k, covers);
    if (hit) return VertexSet(*hit);
  }
  return full_vertex_set(g);  // unreachable: V covers everything
}

bool verify_dominating(const Graph& g, const VertexSet& s, const VertexSet& b) {
  Bits covered = closed_neighborhood_bits(g, s.to_bits(g.vertex_count()));
  return (b.to_bits(g.vertex_count()) - covered).none();
}

bool verify_vertex_cover(const Graph& g, const VertexSet& s) {
  Bits in = s.to_bits(g.vertex_count());
  for (auto [u, v] : g.edges())
    if (!in.test(u) && !in.test(v)) return false;
  return true;
}

Gamma gamma(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const Bits& nv = g.closed_mask(v);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    if (nv.is_subset_of(g.closed_mask(u))) return Gamma::kOne;
  }
  return Gamma::kTwoOrMore;
}

}  // namespace localds
