#include "localds/cuts.hpp"

#include <stdexcept>

namespace localds {

namespace {

constexpr Bits::size_type knpos = Bits::npos;

// Components of g[allowed] that fail to touch N(u) or N(v) make the pair
// non-minimal: that endpoint could be dropped from the cut.
bool touches_all(const Graph& g, const std::vector<VertexSet>& comps, Vertex u, Vertex v) {
  for (const auto& comp : comps) {
    bool near_u = false, near_v = false;
    for (Vertex w : comp) {
      near_u |= g.has_edge(w, u);
      near_v |= g.has_edge(w, v);
    }
    if (!near_u || !near_v) return false;
  }
  return true;
}

}  // namespace

std::optional<CutRecord> is_local_1_cut(const Graph& g, Vertex v, int r) {
  g.check_vertex(v);
  if (r < 1) throw std::invalid_argument("is_local_1_cut: radius must be >= 1");
  Bits allowed = ball_bits(g, v, r);
  allowed.reset(v);
  auto comps = components_within(g, allowed);
  if (comps.size() < 2) return std::nullopt;
  return CutRecord{VertexSet::single(v), r, std::move(comps), true};
}

std::vector<CutRecord> local_2_cuts_at(const Graph& g, Vertex v, int r) {
  g.check_vertex(v);
  if (r < 1) throw std::invalid_argument("local_2_cuts_at: radius must be >= 1");
  std::vector<CutRecord> out;
  Bits ball_v = ball_bits(g, v, r);
  for (auto uu = ball_v.find_first(); uu != knpos; uu = ball_v.find_next(uu)) {
    Vertex u = static_cast<Vertex>(uu);
    if (u == v) continue;
    Bits allowed = ball_v | ball_bits(g, u, r);
    allowed.reset(v);
    allowed.reset(u);
    auto comps = components_within(g, allowed);
    if (comps.size() < 2) continue;
    if (!touches_all(g, comps, u, v)) continue;
    out.push_back(CutRecord{VertexSet({u, v}), r, std::move(comps), true});
  }
  return out;
}

std::optional<InterestingWitness> is_r_interesting(const Graph& g, Vertex v, int r) {
  if (r < 2) throw std::invalid_argument("is_r_interesting: radius must be >= 2");
  for (auto& cut : local_2_cuts_at(g, v, r)) {
    Vertex partner = cut.members.ids()[0] == v ? cut.members.ids()[1] : cut.members.ids()[0];
    Bits private_side = g.closed_mask(v) - g.closed_mask(partner);
    if (private_side.none()) continue;  // N[v] inside N[partner]
    int first = -1, second = -1;
    for (int i = 0; i < static_cast<int>(cut.attached_components.size()) && second < 0; ++i) {
      bool has_far = false;
      for (Vertex w : cut.attached_components[i])
        if (!g.closed_mask(partner).test(w)) {
          has_far = true;
          break;
        }
      if (!has_far) continue;
      (first < 0 ? first : second) = i;
    }
    if (second < 0) continue;
    InterestingWitness wit;
    wit.cut = std::move(cut);
    wit.partner = partner;
    wit.private_neighbor = static_cast<Vertex>(private_side.find_first());
    wit.witness_components = {first, second};
    return wit;
  }
  return std::nullopt;
}

CutSets enumerate_cut_sets(const Graph& g, const AlgorithmConfig& cfg) {
  cfg.validate();
  std::vector<Vertex> x, i;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_local_1_cut(g, v, cfg.r1)) x.push_back(v);
    if (is_r_interesting(g, v, cfg.r2)) i.push_back(v);
  }
  return {VertexSet(std::move(x)), VertexSet(std::move(i))};
}

VertexSet local_2_cut_vertices(const Graph& g, int r) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!local_2_cuts_at(g, v, r).empty()) out.push_back(v);
  return VertexSet(std::move(out));
}

NodeProgram one_cut_program(int r) {
  if (r < 1) throw std::invalid_argument("one_cut_program: radius must be >= 1");
  return {"one-cut", r, [r](const NodeView& nv) {
            auto cut = is_local_1_cut(nv.view, nv.root_local, r);
            return NodeOutput{cut.has_value(),
                              cut ? static_cast<std::int64_t>(cut->attached_components.size())
                                  : 0};
          }};
}

NodeProgram interesting_program(int r) {
  if (r < 2) throw std::invalid_argument("interesting_program: radius must be >= 2");
  return {"interesting", 2 * r + 1, [r](const NodeView& nv) {
            auto wit = is_r_interesting(nv.view, nv.root_local, r);
            return NodeOutput{wit.has_value(),
                              wit ? static_cast<std::int64_t>(nv.original_ids[wit->partner]) : 0};
          }};
}

}  // namespace localds
