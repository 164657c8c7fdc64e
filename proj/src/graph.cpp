#include "localds/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace localds {

namespace {
constexpr Bits::size_type knpos = Bits::npos;
}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::single(Vertex v) { return VertexSet({v}); }

VertexSet VertexSet::from_bits(const Bits& b) {
  std::vector<Vertex> out;
  for (auto i = b.find_first(); i != knpos; i = b.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  VertexSet s;
  s.ids_ = std::move(out);  // already sorted and unique
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

Bits VertexSet::to_bits(int universe) const {
  Bits b(universe);
  for (Vertex v : ids_) b.set(v);
  return b;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.closed_.assign(n, Bits(n));
  for (int v = 0; v < n; ++v) g.closed_[v].set(v);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: vertex id out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("graph: self-loop at " + std::to_string(u));
    if (g.closed_[u].test(v))
      throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.closed_[u].set(v);
    g.closed_[v].set(u);
    ++g.m_;
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && closed_[u].test(v);
}

const Bits& Graph::closed_mask(Vertex v) const {
  check_vertex(v);
  return closed_[v];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

Bits ball_bits(const Graph& g, Vertex v, int radius) {
  g.check_vertex(v);
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  Bits reach(g.vertex_count());
  reach.set(v);
  Bits frontier = reach;
  for (int step = 0; step < radius; ++step) {
    Bits next(g.vertex_count());
    for (auto u = frontier.find_first(); u != knpos; u = frontier.find_next(u))
      next |= g.closed_mask(static_cast<Vertex>(u));
    next -= reach;
    if (next.none()) break;
    reach |= next;
    frontier = next;
  }
  return reach;
}

VertexSet ball(const Graph& g, Vertex v, int radius) {
  return VertexSet::from_bits(ball_bits(g, v, radius));
}

Bits closed_neighborhood_bits(const Graph& g, const Bits& s) {
  Bits out = s;
  for (auto u = s.find_first(); u != knpos; u = s.find_next(u))
    out |= g.closed_mask(static_cast<Vertex>(u));
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  return VertexSet::from_bits(closed_neighborhood_bits(g, s.to_bits(g.vertex_count())));
}

namespace {

// Single-source BFS distances, -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = bfs_distances(g, v);
  return d;
}

std::optional<int> weak_diameter(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  if (s.size() <= 1) return 0;
  int best = 0;
  for (Vertex v : s) {
    auto dist = bfs_distances(g, v);
    for (Vertex u : s) {
      if (dist[u] < 0) return std::nullopt;
      best = std::max(best, dist[u]);
    }
  }
  return best;
}

std::vector<VertexSet> r_components(const Graph& g, const VertexSet& s, int r) {
  if (r < 0) throw std::invalid_argument("r_components: negative radius");
  for (Vertex v : s) g.check_vertex(v);
  const auto& members = s.ids();
  const int k = static_cast<int>(members.size());
  std::vector<int> part(k, -1);
  std::vector<VertexSet> out;
  for (int i = 0; i < k; ++i) {
    if (part[i] >= 0) continue;
    // grow the part of members[i] by distance-<=r hops between members
    std::vector<int> stack{i};
    std::vector<Vertex> collected;
    part[i] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      collected.push_back(members[cur]);
      Bits reach = ball_bits(g, members[cur], r);
      for (int j = 0; j < k; ++j)
        if (part[j] < 0 && reach.test(members[j])) {
          part[j] = part[i];
          stack.push_back(j);
        }
    }
    out.push_back(VertexSet(std::move(collected)));
  }
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const Bits& allowed) {
  std::vector<VertexSet> out;
  Bits unseen = allowed;
  for (auto s = unseen.find_first(); s != knpos; s = unseen.find_first()) {
    Bits comp(g.vertex_count());
    comp.set(s);
    Bits frontier = comp;
    while (frontier.any()) {
      Bits next(g.vertex_count());
      for (auto u = frontier.find_first(); u != knpos; u = frontier.find_next(u))
        next |= g.closed_mask(static_cast<Vertex>(u));
      next &= allowed;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(VertexSet::from_bits(comp));
    unseen -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  Bits all(g.vertex_count());
  all.set();
  return components_within(g, all);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  InducedSubgraph out;
  out.to_original = s.ids();
  out.from_original.assign(g.vertex_count(), -1);
  for (int i = 0; i < s.size(); ++i) out.from_original[out.to_original[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < s.size(); ++i)
    for (Vertex w : g.neighbors(out.to_original[i])) {
      int j = out.from_original[w];
      if (j > i) edges.emplace_back(i, j);
    }
  out.graph = Graph::from_edges(s.size(), edges);
  return out;
}

TwinReduction remove_true_twins(const Graph& g) {
  const int n = g.vertex_count();
  TwinReduction out;
  out.representative.assign(n, -1);
  // group by identical closed neighborhoods; lowest id wins
  std::map<Bits, Vertex> rep_of_mask;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = rep_of_mask.try_emplace(g.closed_mask(v), v);
    out.representative[v] = it->second;  // v visited in increasing order
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (out.representative[v] == v) kept.push_back(v);
  auto ind = induced_subgraph(g, VertexSet(kept));
  out.reduced = std::move(ind.graph);
  out.kept = std::move(ind.to_original);
  out.to_reduced.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) out.to_reduced[v] = ind.from_original[out.representative[v]];
  return out;
}

}  // namespace localds
