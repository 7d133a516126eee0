#pragma once

// Test-only helpers: fixture loading, random instance generators and
// brute-force oracles that share no code with the library routines they
// check.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kdet/diagram.hpp"
#include "kdet/exact.hpp"
#include "kdet/graph.hpp"
#include "kdet/states.hpp"

namespace kdet::testing {

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
LinkDiagram load_pd(const std::string& name);

// Corpus knots and links with their determinants.
struct CorpusEntry {
  std::string file;
  int determinant;
  std::size_t components;
};
const std::vector<CorpusEntry>& corpus();

// Braid closure as PD quadruples. Generator +i / -i is sigma_i or its
// inverse on strands i-1, i (1-based i). Strands run upward, closing on the
// right.
std::vector<std::array<std::uint64_t, 4>> braid_closure(std::size_t strands, const std::vector<int>& word);
// Random braid word of the given length using every generator at least
// twice, so the closure has no nugatory crossing. With alternating = true,
// sigma_i always carries the sign (-1)^i, which makes the closure alternating.
std::vector<int> random_braid_word(std::mt19937& rng, std::size_t strands, std::size_t length, bool alternating);

// Connected balanced digraph built from random cycles; loop-free.
DirectedMultigraph random_eulerian_digraph(std::mt19937& rng, std::size_t vertices, std::size_t extra_cycles);
// Connected digraph with random arcs, not necessarily balanced.
DirectedMultigraph random_digraph(std::mt19937& rng, std::size_t vertices, std::size_t arcs);
// Connected bipartite multigraph: a random spanning tree plus extra edges.
BipartiteGraph random_bipartite(std::mt19937& rng, std::size_t e_count, std::size_t v_count, std::size_t extra);

// Laplace expansion along the first row.
BigInt cofactor_determinant(const Matrix<BigInt>& m);
// Sum over permutations of products, by expansion.
BigInt permanent(const Matrix<int>& m);
// Counts in-trees by choosing one out-arc per non-root vertex in every
// possible way and keeping the acyclic choices.
BigInt brute_force_arborescences(const DirectedMultigraph& g, VertexId root);
// Counts arc sequences that start with `fixed`, use every arc once and close up.
BigInt brute_force_eulerian_tours(const DirectedMultigraph& g, ArcId fixed);
// Number of proper 2-colourings of the region adjacency graph with a given
// region white, by trying all 2^regions assignments.
std::size_t brute_force_colourings(const Universe& u, RegionId white);
// True if removing some two universe edges disconnects the crossings, i.e.
// the diagram is a connected sum (a kink counts as one).
bool is_composite(const Universe& u);
// Crossing x non-starred region matrix; entry = corners of the crossing in the region.
Matrix<int> state_incidence(const Universe& u, const StarPlacement& s);

}  // namespace kdet::testing
