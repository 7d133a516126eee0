#include "kdet/tait.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kdet/error.hpp"

namespace kdet {

std::size_t FaceColoring::count(Color c) const {
  return static_cast<std::size_t>(std::count(color.begin(), color.end(), c));
}

FaceColoring checkerboard(const Universe& u, Color outer_color) {
  FaceColoring c;
  c.outer = u.outer_region();
  std::vector<int> assigned(u.region_count(), -1);
  const auto flip = [](Color x) { return x == Color::white ? Color::black : Color::white; };
  c.color.assign(u.region_count(), Color::white);
  std::vector<RegionId> stack{c.outer};
  assigned[c.outer] = 1;
  c.color[c.outer] = outer_color;
  while (!stack.empty()) {
    const RegionId r = stack.back();
    stack.pop_back();
    for (RegionId s : u.neighbors(r)) {
      if (assigned[s] < 0) {
        assigned[s] = 1;
        c.color[s] = flip(c.color[r]);
        stack.push_back(s);
      } else if (c.color[s] == c.color[r]) {
        throw Error(ErrorCode::NotBipartiteFaces,
                    "regions " + std::to_string(r) + " and " + std::to_string(s) + " share an edge and a color");
      }
    }
  }
  if (std::find(assigned.begin(), assigned.end(), -1) != assigned.end()) {
    throw Error(ErrorCode::NotBipartiteFaces, "face adjacency graph is disconnected");
  }
  return c;
}

void validate_coloring(const Universe& u, const FaceColoring& c) {
  if (c.color.size() != u.region_count()) {
    throw Error(ErrorCode::NotBipartiteFaces, "coloring size does not match the region count");
  }
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const auto [a, b] = u.edge_sides(e);
    if (c.of(a) == c.of(b)) {
      throw Error(ErrorCode::NotBipartiteFaces, "edge " + std::to_string(e + 1) + " has one color on both sides");
    }
  }
  if (c.of(u.outer_region()) != Color::white) {
    throw Error(ErrorCode::OuterNotWhite, "the outer region is black");
  }
}

std::size_t TaitGraph::e_index(RegionId black) const {
  return static_cast<std::size_t>(std::lower_bound(black_regions.begin(), black_regions.end(), black) -
                                  black_regions.begin());
}

std::size_t TaitGraph::v_index(RegionId white) const {
  return static_cast<std::size_t>(std::lower_bound(white_regions.begin(), white_regions.end(), white) -
                                  white_regions.begin());
}

BipartiteGraph TaitGraph::bipartite() const {
  BipartiteGraph g;
  g.e_count = black_regions.size();
  g.v_count = white_regions.size();
  g.edges.reserve(edges.size());
  for (const auto& te : edges) g.edges.emplace_back(e_index(te.black), v_index(te.white));
  return g;
}

TaitGraph tait_graph(const Universe& u, const FaceColoring& c) {
  TaitGraph g;
  for (const auto& r : u.regions()) {
    (c.of(r.id) == Color::black ? g.black_regions : g.white_regions).push_back(r.id);
  }
  g.edges.reserve(u.edge_count());
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const auto [right, left] = u.edge_sides(e);
    const bool right_black = c.of(right) == Color::black;
    g.edges.push_back({right_black ? right : left, right_black ? left : right, e});
  }
  return g;
}

std::size_t DirectedUniverse::outdegree(CrossingId x) const {
  return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [x](const Arc& a) { return a.tail == x; }));
}

std::size_t DirectedUniverse::indegree(CrossingId x) const {
  return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [x](const Arc& a) { return a.head == x; }));
}

bool DirectedUniverse::balanced() const {
  for (CrossingId x = 0; x < vertex_count; ++x) {
    if (indegree(x) != 2 || outdegree(x) != 2) return false;
  }
  return true;
}

DirectedMultigraph DirectedUniverse::digraph() const {
  DirectedMultigraph g;
  g.vertex_count = vertex_count;
  g.allow_loops = true;
  g.arcs.reserve(arcs.size());
  for (const auto& a : arcs) g.arcs.emplace_back(a.tail, a.head);
  return g;
}

DirectedUniverse orient_universe(const Universe& u, const FaceColoring& c) {
  DirectedUniverse du;
  du.vertex_count = u.vertex_count();
  du.arcs.reserve(u.edge_count());
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const auto [first, second] = u.darts_of_edge(e);
    const auto right = u.edge_sides(e).first;
    if (c.of(right) == Color::black) {
      du.arcs.push_back({crossing_of(first), crossing_of(second), e, first});
    } else {
      du.arcs.push_back({crossing_of(second), crossing_of(first), e, second});
    }
  }
  return du;
}

DualEdgeMap dual_edge_map(const Universe& u, const TaitGraph& g, const DirectedUniverse& du) {
  if (g.edges.size() != du.arcs.size() || g.edges.size() != u.edge_count()) {
    throw std::logic_error("Tait graph and directed universe disagree on the edge count");
  }
  DualEdgeMap m;
  m.arc_to_tait.assign(du.arcs.size(), 0);
  m.tait_to_arc.assign(g.edges.size(), 0);
  std::vector<bool> hit(du.arcs.size(), false);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const EdgeId e = g.edges[i].universe_edge;
    ArcId a = du.arcs.size();
    for (ArcId j = 0; j < du.arcs.size(); ++j) {
      if (du.arcs[j].edge == e) a = j;
    }
    if (a == du.arcs.size() || hit[a]) throw std::logic_error("edge correspondence is not a bijection");
    hit[a] = true;
    // The arc must have the G-edge's black end on its right.
    const auto [right, left] = u.edge_sides(e);
    const RegionId black_side = du.arcs[a].source == u.darts_of_edge(e).first ? right : left;
    if (black_side != g.edges[i].black) {
      throw std::logic_error("arc " + std::to_string(a) + " does not have its black region on the right");
    }
    m.tait_to_arc[i] = a;
    m.arc_to_tait[a] = i;
  }
  return m;
}

}  // namespace kdet
