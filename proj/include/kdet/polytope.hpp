#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdet/exact.hpp"
#include "kdet/graph.hpp"
#include "kdet/guard.hpp"
#include "kdet/tait.hpp"

namespace kdet {

// Coordinates over E ⊕ V, E block first.
using LatticePoint = std::vector<int>;

// Coordinates of the affine hull: the pivot columns of the integral reduced
// row echelon basis of the vertex differences. Projection onto them maps the
// affine lattice of the polytope bijectively onto Z^dim, so determinants in
// chart coordinates are lattice-normalized volumes.
struct LatticeChart {
  std::vector<std::size_t> pivots;
  LatticePoint origin;

  std::vector<CheckedInt> project(const LatticePoint& x) const;
};

struct RootPolytope {
  BipartiteGraph graph;
  std::vector<LatticePoint> vertices;  // one per edge of graph, same order
  std::size_t dim = 0;
  LatticeChart chart;

  std::size_t ambient_dimension() const { return graph.vertex_count(); }
};

// Throws Error(NonUnimodularChart) if the difference lattice has no integral
// echelon basis (never for root polytopes).
RootPolytope root_polytope(const BipartiteGraph& g);

struct Simplex {
  std::vector<std::size_t> edges;  // generating edges of the graph, ascending
  std::vector<LatticePoint> vertices;
  BigInt normalized_volume = 0;
};

// Throws Error(DegenerateSimplex) unless the edge points are dim + 1
// affinely independent points.
Simplex tree_simplex(const RootPolytope& p, std::span<const std::size_t> tree_edges);

struct Triangulation {
  std::vector<Simplex> simplices;
};

// One simplex per arborescence of du converging to root: the G-edges dual to
// the arcs left out of the arborescence form a spanning tree of G.
Triangulation arborescence_triangulation(const RootPolytope& p, const Universe& u, const TaitGraph& g,
                                         const DirectedUniverse& du, VertexId root, const GuardLimits& guard = {});

// Pulling triangulation: pull the lowest vertex, cone it over the
// triangulated facets that miss it, recursing on faces. Returns indices into
// the distinct polytope points (first occurrence of each edge point).
// Throws Error(TooLarge) beyond the guard.
std::vector<std::vector<std::size_t>> pulling_triangulation(const RootPolytope& p, const GuardLimits& guard = {});

// dim! times the Euclidean volume, relative to the affine lattice, via the
// pulling triangulation. Shares nothing with tree or arborescence code.
BigInt normalized_volume(const RootPolytope& p, const GuardLimits& guard = {});

// Exact test that conv(a) ∩ conv(b) is the common face conv(a ∩ b), for two
// full-dimensional simplices given as point lists in p's ambient space.
bool intersect_properly(const RootPolytope& p, std::span<const LatticePoint> a, std::span<const LatticePoint> b);

struct TriangulationReport {
  bool unimodular = false;
  BigInt volume_sum = 0;
  std::optional<BigInt> polytope_volume;   // empty beyond the guard
  std::optional<bool> proper_intersections;  // empty beyond the guard
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

TriangulationReport verify_triangulation(const Triangulation& tri, const RootPolytope& p,
                                         const GuardLimits& guard = {});

}  // namespace kdet
