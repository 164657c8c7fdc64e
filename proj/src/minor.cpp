#include "localds/minor.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "localds/exact.hpp"

namespace localds {

namespace {

constexpr Bits::size_type knpos = Bits::npos;

// Safety valve for adversarial inputs: the hub search refuses instead of
// hanging once this many work units are spent.
constexpr long kSearchBudget = 50'000'000;
constexpr long kSetCharge = 50;
constexpr long kPairCharge = 1;
constexpr long kFlowCharge = 10;

void charge(long& budget, long amount) {
  budget -= amount;
  if (budget < 0) throw SizeCapExceeded("minor check: search budget exceeded");
}

bool connected_in(const Graph& g, const Bits& mask) {
  auto start = mask.find_first();
  if (start == knpos) return true;
  Bits seen(g.vertex_count());
  seen.set(start);
  std::vector<Vertex> stack{static_cast<Vertex>(start)};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (mask.test(w) && !seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return seen == mask;
}

Bits closed_hood(const Graph& g, const Bits& set) {
  Bits out(g.vertex_count());
  for (auto v = set.find_first(); v != knpos; v = set.find_next(v))
    out |= g.closed_mask(static_cast<Vertex>(v));
  return out;
}

// v is redundant in a when dropping it keeps the rest connected and loses
// no adjacency: any hub using a works just as well with a minus v.  Once
// true this stays true for every superset grown by attaching neighbors,
// which is what makes subtree pruning below exact.
bool has_redundant_vertex(const Graph& g, const Bits& a) {
  if (a.count() < 2) return false;
  for (auto vb = a.find_first(); vb != knpos; vb = a.find_next(vb)) {
    auto v = static_cast<Vertex>(vb);
    Bits rest = a;
    rest.reset(vb);
    if (g.closed_mask(v).is_subset_of(closed_hood(g, rest)) && connected_in(g, rest))
      return true;
  }
  return false;
}

struct HubCandidate {
  Bits members;
  Bits hood;  // N[members]
};

// Connected-set enumeration rooted at the set minimum, with sibling
// exclusion for uniqueness.  Subtrees rooted at a reducible set are cut:
// every superset reached through them keeps the redundant vertex.
void enumerate_hubs(const Graph& g, Vertex root, const Bits& a, const Bits& forbidden,
                    std::vector<HubCandidate>& out, long& budget) {
  charge(budget, kSetCharge);
  Bits hood = closed_hood(g, a);
  Bits ext = hood - a - forbidden;
  out.push_back({a, std::move(hood)});

  std::vector<Vertex> cands;
  for (auto w = ext.find_first(); w != knpos; w = ext.find_next(w))
    if (static_cast<Vertex>(w) > root) cands.push_back(static_cast<Vertex>(w));

  Bits forb = forbidden;
  for (Vertex w : cands) {
    Bits child = a;
    child.set(w);
    if (!has_redundant_vertex(g, child)) enumerate_hubs(g, root, child, forb, out, budget);
    forb.set(w);
  }
}

std::vector<HubCandidate> block_hubs(const Graph& g, long& budget) {
  std::vector<HubCandidate> out;
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    Bits a(g.vertex_count());
    a.set(r);
    enumerate_hubs(g, r, a, Bits(g.vertex_count()), out, budget);
  }
  std::stable_sort(out.begin(), out.end(), [](const HubCandidate& x, const HubCandidate& y) {
    return x.members.count() < y.members.count();
  });
  return out;
}

struct FlowNetwork {
  struct Arc {
    int to;
    int cap;
    int rev;
    bool forward;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowNetwork(int nodes) : adj(nodes) {}

  void add_edge(int u, int v) {
    adj[u].push_back({v, 1, static_cast<int>(adj[v].size()), true});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1, false});
  }

  // One unit along a shortest augmenting path from node 0 to node 1.
  bool augment() {
    std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
    std::vector<int> queue{0};
    parent[0] = {0, 0};
    for (std::size_t qi = 0; qi < queue.size() && parent[1].first < 0; ++qi) {
      int u = queue[qi];
      for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
        const Arc& arc = adj[u][i];
        if (arc.cap > 0 && parent[arc.to].first < 0) {
          parent[arc.to] = {u, i};
          queue.push_back(arc.to);
        }
      }
    }
    if (parent[1].first < 0) return false;
    for (int v = 1; v != 0;) {
      auto [u, i] = parent[v];
      adj[u][i].cap -= 1;
      adj[v][adj[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }
};

// Vertex-disjoint connections between two disjoint hub sets: interior
// vertices get unit capacity via node splitting, direct hub-hub edges do
// not count (a spoke needs at least one vertex of its own).
struct SpokeFlow {
  FlowNetwork net;
  int n;

  SpokeFlow(const Graph& g, const Bits& a, const Bits& b, const Bits& hood_a, const Bits& hood_b)
      : net(2 + 2 * g.vertex_count()), n(g.vertex_count()) {
    Bits used = a | b;
    for (Vertex v = 0; v < n; ++v) {
      if (used.test(v)) continue;
      net.add_edge(vin(v), vout(v));
      if (hood_a.test(v)) net.add_edge(0, vin(v));
      if (hood_b.test(v)) net.add_edge(vout(v), 1);
    }
    for (auto [u, w] : g.edges()) {
      if (used.test(u) || used.test(w)) continue;
      net.add_edge(vout(u), vin(w));
      net.add_edge(vout(w), vin(u));
    }
  }

  static int vin(Vertex v) { return 2 + 2 * v; }
  static int vout(Vertex v) { return 3 + 2 * v; }

  int run(int limit) {
    int flow = 0;
    while (flow < limit && net.augment()) ++flow;
    return flow;
  }

  // Walks used arcs from the source, consuming them; each walk yields the
  // interior vertices of one hub-to-hub path in traversal order.
  std::vector<std::vector<Vertex>> extract_paths() {
    std::vector<std::vector<Vertex>> paths;
    for (auto& arc : net.adj[0]) {
      if (!arc.forward || arc.cap != 0) continue;
      arc.cap = 1;
      std::vector<Vertex> path;
      int node = arc.to;
      while (node != 1) {
        if (node >= 2 && (node - 2) % 2 == 0) path.push_back((node - 2) / 2);
        bool advanced = false;
        for (auto& nxt : net.adj[node]) {
          if (nxt.forward && nxt.cap == 0) {
            nxt.cap = 1;
            node = nxt.to;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
      paths.push_back(std::move(path));
    }
    return paths;
  }
};

struct PairHit {
  Bits a;
  Bits b;
};

struct BlockScan {
  int best = 0;
  std::optional<PairHit> hit;
};

// Scans hub pairs.  goal > 0: stop at the first pair carrying `goal`
// spokes.  goal <= 0: exhaustive max, skipping pairs that cannot beat
// `floor`.  Cheap capacity bounds prune before any flow is built.
BlockScan scan_block(const Graph& g, const std::vector<HubCandidate>& hubs, int goal, int floor,
                     long& budget) {
  BlockScan out;
  int n = g.vertex_count();
  for (std::size_t i = 0; i < hubs.size(); ++i) {
    for (std::size_t j = i + 1; j < hubs.size(); ++j) {
      charge(budget, kPairCharge);
      const HubCandidate& ha = hubs[i];
      const HubCandidate& hb = hubs[j];
      if (ha.members.intersects(hb.members)) continue;
      int needed = goal > 0 ? goal : std::max(out.best, floor) + 1;
      Bits both = ha.members | hb.members;
      if (n - static_cast<int>(both.count()) < needed) continue;
      if (static_cast<int>((ha.hood - both).count()) < needed) continue;
      if (static_cast<int>((hb.hood - both).count()) < needed) continue;
      charge(budget, kFlowCharge);
      SpokeFlow flow(g, ha.members, hb.members, ha.hood, hb.hood);
      int mu = flow.run(goal > 0 ? goal : n);
      out.best = std::max(out.best, mu);
      if (goal > 0 && mu >= goal) {
        out.hit = PairHit{ha.members, hb.members};
        return out;
      }
    }
  }
  return out;
}

struct BlockFinder {
  const Graph& g;
  std::vector<int> num;
  std::vector<int> low;
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  int counter = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

  void pop_block(std::pair<Vertex, Vertex> top) {
    Bits seen(g.vertex_count());
    std::vector<Vertex> verts;
    std::pair<Vertex, Vertex> e;
    do {
      e = edge_stack.back();
      edge_stack.pop_back();
      for (Vertex v : {e.first, e.second}) {
        if (!seen.test(v)) {
          seen.set(v);
          verts.push_back(v);
        }
      }
    } while (e != top);
    std::sort(verts.begin(), verts.end());
    blocks.push_back(std::move(verts));
  }

  void dfs(Vertex v, Vertex parent) {
    num[v] = low[v] = counter++;
    for (Vertex w : g.neighbors(v)) {
      if (num[w] < 0) {
        edge_stack.push_back({v, w});
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) pop_block({v, w});
      } else if (w != parent && num[w] < num[v]) {
        edge_stack.push_back({v, w});
        low[v] = std::min(low[v], num[w]);
      }
    }
  }
};

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  BlockFinder finder(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (finder.num[v] < 0) finder.dfs(v, -1);
  std::stable_sort(finder.blocks.begin(), finder.blocks.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return finder.blocks;
}

VertexSet map_back(const Bits& local, const std::vector<Vertex>& to_original) {
  std::vector<Vertex> ids;
  for (auto v = local.find_first(); v != knpos; v = local.find_next(v))
    ids.push_back(to_original[static_cast<Vertex>(v)]);
  return VertexSet(std::move(ids));
}

MinorWitness build_witness(const Graph& block, const PairHit& hit, int t,
                           const std::vector<Vertex>& to_original) {
  Bits hood_a = closed_hood(block, hit.a);
  Bits hood_b = closed_hood(block, hit.b);
  SpokeFlow flow(block, hit.a, hit.b, hood_a, hood_b);
  flow.run(t);
  auto paths = flow.extract_paths();

  MinorWitness w;
  w.hub_a = map_back(hit.a, to_original);
  w.hub_b = map_back(hit.b, to_original);
  for (int i = 0; i < t; ++i) {
    const auto& path = paths[i];
    Bits spoke(block.vertex_count());
    for (Vertex v : path) spoke.set(v);
    w.spokes.push_back(map_back(spoke, to_original));
    auto a_end = static_cast<Vertex>((block.closed_mask(path.front()) & hit.a).find_first());
    auto b_end = static_cast<Vertex>((block.closed_mask(path.back()) & hit.b).find_first());
    w.edge_to_a.emplace_back(to_original[a_end], to_original[path.front()]);
    w.edge_to_b.emplace_back(to_original[b_end], to_original[path.back()]);
  }
  return w;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

void check_input(const Graph& g, int cap) {
  if (cap < 0) throw std::invalid_argument("minor check: cap must be non-negative");
  if (g.vertex_count() > cap) throw SizeCapExceeded("minor check: graph exceeds vertex cap");
}

}  // namespace

std::optional<MinorWitness> contains_k2t_minor(const Graph& g, int t, int cap) {
  if (t < 1) throw std::invalid_argument("minor check: t must be positive");
  check_input(g, cap);

  if (t == 1) {
    // A single spoke only needs one vertex with two neighbors.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < 2) continue;
      auto nb = g.neighbors(v);
      MinorWitness w;
      w.hub_a = VertexSet::single(nb[0]);
      w.hub_b = VertexSet::single(nb[1]);
      w.spokes.push_back(VertexSet::single(v));
      w.edge_to_a.emplace_back(nb[0], v);
      w.edge_to_b.emplace_back(nb[1], v);
      return w;
    }
    return std::nullopt;
  }

  // K_{2,t} is 2-connected for t >= 2, so any model sits inside one block.
  long budget = kSearchBudget;
  for (const auto& verts : biconnected_blocks(g)) {
    if (static_cast<int>(verts.size()) < t + 2) continue;
    auto sub = induced_subgraph(g, VertexSet(verts));
    auto hubs = block_hubs(sub.graph, budget);
    auto scan = scan_block(sub.graph, hubs, t, 0, budget);
    if (scan.hit) return build_witness(sub.graph, *scan.hit, t, sub.to_original);
  }
  return std::nullopt;
}

int certify_class(const Graph& g, int cap) {
  check_input(g, cap);
  if (max_degree(g) <= 1) return 1;

  long budget = kSearchBudget;
  int best = 1;  // max degree >= 2 already realizes one spoke
  for (const auto& verts : biconnected_blocks(g)) {
    if (static_cast<int>(verts.size()) < best + 3) continue;
    auto sub = induced_subgraph(g, VertexSet(verts));
    auto hubs = block_hubs(sub.graph, budget);
    best = std::max(best, scan_block(sub.graph, hubs, 0, best, budget).best);
  }
  return best + 1;
}

bool validate_minor_witness(const Graph& g, int t, const MinorWitness& w) {
  if (t < 1) return false;
  if (static_cast<int>(w.spokes.size()) != t) return false;
  if (static_cast<int>(w.edge_to_a.size()) != t) return false;
  if (static_cast<int>(w.edge_to_b.size()) != t) return false;

  int n = g.vertex_count();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };

  std::vector<const VertexSet*> sets{&w.hub_a, &w.hub_b};
  for (const auto& s : w.spokes) sets.push_back(&s);

  Bits used(n);
  for (const VertexSet* s : sets) {
    if (s->empty()) return false;
    Bits mask(n);
    for (Vertex v : *s) {
      if (!in_range(v) || used.test(v)) return false;
      used.set(v);
      mask.set(v);
    }
    if (!connected_in(g, mask)) return false;
  }

  for (int i = 0; i < t; ++i) {
    auto [a, sa] = w.edge_to_a[i];
    auto [b, sb] = w.edge_to_b[i];
    if (!in_range(a) || !in_range(sa) || !in_range(b) || !in_range(sb)) return false;
    if (!w.hub_a.contains(a) || !w.spokes[i].contains(sa) || !g.has_edge(a, sa)) return false;
    if (!w.hub_b.contains(b) || !w.spokes[i].contains(sb) || !g.has_edge(b, sb)) return false;
  }
  return true;
}

}  // namespace localds
