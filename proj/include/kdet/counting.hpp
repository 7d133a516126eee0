#pragma once

#include <compare>
#include <vector>

#include "kdet/exact.hpp"
#include "kdet/graph.hpp"
#include "kdet/guard.hpp"

namespace kdet {

// Spanning in-tree: each non-root vertex has exactly one arc, and following
// arcs always ends at the root.
struct Arborescence {
  VertexId root = 0;
  std::vector<ArcId> arcs;  // the out-arc of each non-root vertex, by ascending tail

  friend auto operator<=>(const Arborescence&, const Arborescence&) = default;
};

// Directed matrix-tree theorem: det of the Laplacian Dout - A with the root's
// row and column removed, by exact fraction-free elimination.
BigInt arborescence_count(const DirectedMultigraph& g, VertexId root);

// Every arborescence converging to root, lexicographic in the arc vector.
// Throws Error(TooLarge) beyond the guard.
std::vector<Arborescence> arborescence_enumerate(const DirectedMultigraph& g, VertexId root,
                                                 const GuardLimits& guard = {});

// BEST theorem: tours starting with the fixed arc number
// tau(g, tail) * prod over vertices of (outdeg - 1)!.
// Throws Error(NotEulerian).
BigInt eulerian_tour_count(const DirectedMultigraph& g, ArcId fixed);

struct RootIndependenceReport {
  std::vector<BigInt> per_root;
  bool passed = false;
};

// Throws Error(NotEulerian) for unbalanced or disconnected input.
RootIndependenceReport root_independence_check(const DirectedMultigraph& g);

// Undirected matrix-tree count.
BigInt spanning_tree_count(const BipartiteGraph& g);

// Every spanning tree as a sorted edge-index list, lexicographic order.
// Throws Error(TooLarge) beyond the guard.
std::vector<std::vector<std::size_t>> spanning_tree_enumerate(const BipartiteGraph& g,
                                                              const GuardLimits& guard = {});

enum class ColorClass { E, V };

// Degree vector on one color class, each entry one less than the degree in
// a witnessing spanning tree.
struct Hypertree {
  ColorClass cls = ColorClass::E;
  std::vector<int> degrees;

  friend auto operator<=>(const Hypertree&, const Hypertree&) = default;
};

std::vector<Hypertree> hypertree_set(const BipartiteGraph& g, ColorClass cls, const GuardLimits& guard = {});

// Same, reusing an already enumerated tree list.
std::vector<Hypertree> hypertree_set(const BipartiteGraph& g, ColorClass cls,
                                     const std::vector<std::vector<std::size_t>>& trees);

}  // namespace kdet
