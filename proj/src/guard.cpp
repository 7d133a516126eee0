#include "kdet/guard.hpp"

#include <cstdlib>
#include <string>

namespace kdet {

GuardLimits GuardLimits::from_env() {
  GuardLimits g;
  const char* raw = std::getenv("KDL_GUARD_MAX");
  if (raw == nullptr || *raw == '\0') return g;
  try {
    const auto n = static_cast<std::size_t>(std::stoul(raw));
    if (n == 0) return g;
    g.max_vertices = n;
    g.max_arcs = 2 * n;
    g.max_polytope_points = n;
    g.max_polytope_dim = n / 2;
  } catch (const std::exception&) {
    // Unparseable values leave the defaults in place.
  }
  return g;
}

}  // namespace kdet
