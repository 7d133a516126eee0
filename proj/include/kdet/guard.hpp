#pragma once

#include <cstddef>

namespace kdet {

// Size limits for the exhaustive (enumeration and brute-force geometry)
// routines. Determinant-based counts are never guarded.
struct GuardLimits {
  std::size_t max_vertices = 12;
  std::size_t max_arcs = 24;
  std::size_t max_polytope_points = 12;
  std::size_t max_polytope_dim = 6;

  // Honors KDL_GUARD_MAX=N (vertices N, arcs 2N, polytope points N, dim N/2).
  static GuardLimits from_env();
};

}  // namespace kdet
