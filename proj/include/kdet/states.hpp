#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kdet/diagram.hpp"

namespace kdet {

// Two adjacent regions that never receive a marker.
struct StarPlacement {
  RegionId first = 0;
  RegionId second = 0;

  bool contains(RegionId r) const { return r == first || r == second; }
  friend auto operator<=>(const StarPlacement&, const StarPlacement&) = default;
};

// The two regions flanking internal edge 1.
StarPlacement default_stars(const Universe& u);

// Every unordered pair of distinct regions sharing an edge, ascending.
std::vector<StarPlacement> adjacent_region_pairs(const Universe& u);

// One marker per crossing, stored as the marked corner (0..3, counterclockwise
// from the incoming under-strand). The region is derived from the corner, so
// a region meeting a crossing twice still distinguishes the two angles.
struct KauffmanState {
  std::vector<std::uint8_t> corner;

  RegionId region(const Universe& u, CrossingId x) const { return u.region_of(kdet::corner(x, corner[x])); }
  std::vector<RegionId> regions(const Universe& u) const;

  friend auto operator<=>(const KauffmanState&, const KauffmanState&) = default;
};

// Markers biject crossings onto the non-starred regions.
bool is_valid_state(const Universe& u, const StarPlacement& s, const KauffmanState& st);

// All states, ordered lexicographically by the crossing -> region vector
// (corner vector as tie break).
std::vector<KauffmanState> enumerate_states(const Universe& u, const StarPlacement& s);

enum class ClockDirection { clockwise, counterclockwise };

// Two markers at the ends of a shared edge, sitting on opposite sides of it,
// trade sides. Both markers turn the same way around their crossings.
struct ClockMove {
  ClockDirection direction = ClockDirection::clockwise;
  EdgeId across = 0;
  KauffmanState successor;
};

std::vector<ClockMove> clock_moves(const Universe& u, const StarPlacement& s, const KauffmanState& st);

struct ClockArc {
  std::size_t from = 0;
  std::size_t to = 0;
  ClockDirection direction = ClockDirection::clockwise;
  EdgeId across = 0;
};

struct ClockLattice {
  std::vector<KauffmanState> nodes;  // enumerate_states order
  std::vector<ClockArc> moves;
  std::size_t clocked = 0;         // admits no counterclockwise move
  std::size_t counterclocked = 0;  // admits no clockwise move
};

// Throws Error(ClockTheoremViolation) if the lattice is disconnected or the
// extremal states are not unique, or when no state exists.
ClockLattice clock_lattice(const Universe& u, const StarPlacement& s);

}  // namespace kdet
