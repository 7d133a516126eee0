#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdet/alexander.hpp"
#include "kdet/diagram.hpp"
#include "kdet/exact.hpp"
#include "kdet/guard.hpp"
#include "kdet/serialize.hpp"
#include "kdet/tait.hpp"

namespace kdet {

struct CertificateOptions {
  Color outer_color = Color::white;
  GuardLimits guard;
  // Roots whose triangulation gets the pairwise face check; the others are
  // checked for count, unimodularity and volume only.
  std::size_t face_checked_roots = SIZE_MAX;
};

struct LatticeSummary {
  std::size_t nodes = 0;
  std::size_t moves = 0;
  std::size_t clocked = 0;
  std::size_t counterclocked = 0;
  bool black_hole_steps = false;  // every move changes b(S) by exactly one
};

struct TriangulationSummary {
  VertexId root = 0;
  std::size_t simplices = 0;
  bool unimodular = false;
  BigInt volume_sum;
  std::optional<bool> proper_intersections;
};

struct Certificate {
  std::string diagram_hash;  // SHA-256 of the serialized PD text
  std::size_t crossings = 0;
  std::size_t components = 0;
  bool alternating = false;
  std::optional<std::size_t> regions;
  std::optional<std::size_t> black_regions;
  std::optional<std::size_t> white_regions;
  std::optional<bool> balanced;

  std::optional<BigInt> state_count;
  std::optional<bool> star_independent;
  std::size_t star_placements = 0;
  std::optional<bool> state_signs_uniform;
  std::optional<IntPolynomial> alexander;
  std::optional<BigInt> alexander_at_minus_one;
  std::optional<LatticeSummary> lattice;
  std::vector<BigInt> arborescences;  // indexed by root
  std::optional<BigInt> eulerian_tours;
  std::optional<BigInt> best_factor;
  std::optional<BigInt> hypertrees_e;
  std::optional<BigInt> hypertrees_v;
  std::optional<std::size_t> polytope_dim;
  std::vector<TriangulationSummary> triangulations;
  std::optional<BigInt> normalized_volume;
  std::optional<BigInt> goeritz;

  std::optional<BigInt> common_value;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  Json to_json() const;
};

std::string diagram_hash(const LinkDiagram& d);

// Runs every route and consistency check. Never throws for a parsed diagram:
// failures are recorded as violations.
Certificate certify(const LinkDiagram& d, const CertificateOptions& options = {});

}  // namespace kdet
