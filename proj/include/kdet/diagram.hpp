#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdet {

using CrossingId = std::size_t;
using EdgeId = std::size_t;    // internal edge id; EdgeId 0 is "internal label 1"
using RegionId = std::size_t;
using DartId = std::size_t;    // 4 * crossing + position
using CornerId = std::size_t;  // 4 * crossing + i, the angle between positions i and i + 1

constexpr CrossingId crossing_of(DartId d) { return d / 4; }
constexpr std::size_t position_of(DartId d) { return d % 4; }
constexpr DartId dart(CrossingId x, std::size_t position) { return 4 * x + position % 4; }
constexpr CornerId corner(CrossingId x, std::size_t i) { return 4 * x + i % 4; }

// One crossing in planar-diagram form: four edge ends listed counterclockwise,
// position 0 being the incoming under-strand.
struct Crossing {
  CrossingId id = 0;
  std::array<EdgeId, 4> edges{};
  std::array<std::uint64_t, 4> labels{};  // as written in the input
};

// A strand component visits crossings in travel order; each visit records the
// dart it enters through. Even positions are under-passes.
struct StrandComponent {
  std::vector<DartId> entries;
};

enum class CrossingSign { positive, negative };

class LinkDiagram {
 public:
  // Validates and renumbers. Throws Error (BadEdgeMultiplicity, Disconnected,
  // EmptyDiagram, InconsistentOrientation).
  static LinkDiagram from_quadruples(std::span<const std::array<std::uint64_t, 4>> quads);

  std::size_t n() const { return crossings_.size(); }
  std::size_t edge_count() const { return 2 * crossings_.size(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(CrossingId x) const { return crossings_[x]; }

  // The two darts carrying edge e, lower dart id first.
  std::pair<DartId, DartId> darts_of_edge(EdgeId e) const { return edge_darts_[e]; }
  DartId partner(DartId d) const;

  const std::vector<StrandComponent>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }

  // Position (1 or 3) where the over-strand enters crossing x under the
  // travel direction fixed by the under-strands.
  std::size_t over_entry(CrossingId x) const { return over_entry_[x]; }
  // Right-handed crossings are positive; with position 0 incoming, that is
  // the over-strand running from position 3 to position 1.
  CrossingSign sign(CrossingId x) const {
    return over_entry_[x] == 3 ? CrossingSign::positive : CrossingSign::negative;
  }

  // Serializes with the original labels, one "X a b c d" line per crossing.
  std::string to_pd_text() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::pair<DartId, DartId>> edge_darts_;
  std::vector<StrandComponent> components_;
  std::vector<std::size_t> over_entry_;
};

// Parses PD text: lines "X a b c d", '#' comments and blank lines ignored.
// Throws Error(MalformedLine) plus the errors of from_quadruples.
LinkDiagram parse_pd(std::string_view text);

// Along every strand component, visits alternate between under and over.
bool check_alternating(const LinkDiagram& d);

struct Region {
  RegionId id = 0;
  std::vector<DartId> boundary;  // darts left along, region on the right
  std::vector<CornerId> corners;
  std::vector<CrossingId> incident_crossings;  // sorted, unique
};

// The 4-regular plane map underlying a diagram. Rotation at every crossing is
// the counterclockwise position order; faces come from the standard face walk.
class Universe {
 public:
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return 2 * n_; }
  std::size_t region_count() const { return regions_.size(); }
  std::size_t dart_count() const { return 4 * n_; }

  DartId partner(DartId d) const { return pairing_[d]; }
  EdgeId edge_of(DartId d) const { return edge_of_dart_[d]; }
  std::pair<DartId, DartId> darts_of_edge(EdgeId e) const { return edge_darts_[e]; }
  DartId next_ccw(DartId d) const { return dart(crossing_of(d), position_of(d) + 1); }

  RegionId region_of(CornerId c) const { return corner_region_[c]; }
  const std::vector<Region>& regions() const { return regions_; }
  const Region& region(RegionId r) const { return regions_[r]; }

  // Sides of edge e for travel from its first dart's crossing to its second:
  // {right, left}.
  std::pair<RegionId, RegionId> edge_sides(EdgeId e) const;
  // Regions sharing at least one edge with r, sorted.
  std::vector<RegionId> neighbors(RegionId r) const;

  // The plane map carries no distinguished face; the region with the longest
  // boundary (lowest id on ties) plays the unbounded region.
  RegionId outer_region() const;

  friend Universe build_universe(const LinkDiagram& d);

 private:
  std::size_t n_ = 0;
  std::vector<DartId> pairing_;
  std::vector<EdgeId> edge_of_dart_;
  std::vector<std::pair<DartId, DartId>> edge_darts_;
  std::vector<RegionId> corner_region_;
  std::vector<Region> regions_;
};

// Throws Error(NonPlanarEmbedding) when the face count is not n + 2.
Universe build_universe(const LinkDiagram& d);

}  // namespace kdet
