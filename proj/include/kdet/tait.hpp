#pragma once

#include <cstdint>
#include <vector>

#include "kdet/diagram.hpp"
#include "kdet/graph.hpp"

namespace kdet {

enum class Color : std::uint8_t { white, black };

struct FaceColoring {
  std::vector<Color> color;  // indexed by region id
  RegionId outer = 0;

  Color of(RegionId r) const { return color[r]; }
  std::size_t count(Color c) const;
};

// Proper 2-coloring of the regions. By default the designated outer region
// is white; passing Color::black yields the other Tait graph.
// Throws Error(NotBipartiteFaces) on corrupted map data.
FaceColoring checkerboard(const Universe& u, Color outer_color = Color::white);

// Throws NotBipartiteFaces if two regions sharing an edge have the same color
// and OuterNotWhite if the coloring breaks the white-outside convention.
void validate_coloring(const Universe& u, const FaceColoring& c);

// One edge of G per universe edge, joining the black and white regions on
// its two sides.
struct TaitEdge {
  RegionId black = 0;
  RegionId white = 0;
  EdgeId universe_edge = 0;
};

// The plane bipartite graph G: one vertex per region, classes E (black) and
// V (white). Its planar dual is the universe.
struct TaitGraph {
  std::vector<RegionId> black_regions;  // class E, ascending region id
  std::vector<RegionId> white_regions;  // class V, ascending region id
  std::vector<TaitEdge> edges;          // indexed by universe edge id

  std::size_t e_index(RegionId black) const;
  std::size_t v_index(RegionId white) const;
  // Same edge order; E and V indices as above.
  BipartiteGraph bipartite() const;
};

TaitGraph tait_graph(const Universe& u, const FaceColoring& c);

struct Arc {
  CrossingId tail = 0;
  CrossingId head = 0;
  EdgeId edge = 0;
  DartId source = 0;  // dart at the tail end
};

// The universe with every edge directed so that its black side is on the
// right. This is G* carrying the arborescences.
struct DirectedUniverse {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;  // indexed by universe edge id

  std::size_t outdegree(CrossingId x) const;
  std::size_t indegree(CrossingId x) const;
  bool balanced() const;
  DirectedMultigraph digraph() const;
};

DirectedUniverse orient_universe(const Universe& u, const FaceColoring& c);

// Pairs every G-edge with the arc of G* crossing it.
struct DualEdgeMap {
  std::vector<ArcId> tait_to_arc;
  std::vector<std::size_t> arc_to_tait;
};

// Throws std::logic_error if g and du were not built from the same
// universe and coloring.
DualEdgeMap dual_edge_map(const Universe& u, const TaitGraph& g, const DirectedUniverse& du);

}  // namespace kdet
