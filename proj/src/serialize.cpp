#include "kdet/serialize.hpp"

#include <limits>
#include <string>

namespace kdet {

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::object();
  for (const auto& [power, c] : p.coefficients()) coeffs[std::to_string(power)] = to_json(c);
  return Json{{"coeffs", coeffs}};
}

Json to_json(const Universe& u, const KauffmanState& st) {
  Json out = Json::object();
  for (CrossingId x = 0; x < st.corner.size(); ++x) out[std::to_string(x)] = st.region(u, x);
  return out;
}

Json to_json(const Universe& u, std::span<const KauffmanState> states) {
  Json out = Json::array();
  for (const auto& st : states) out.push_back(to_json(u, st));
  return out;
}

Json to_json(const Universe& u, const ClockLattice& lattice) {
  Json moves = Json::array();
  for (const auto& m : lattice.moves) {
    moves.push_back({{"from", m.from},
                     {"to", m.to},
                     {"direction", m.direction == ClockDirection::clockwise ? "clockwise" : "counterclockwise"},
                     {"edge", m.across}});
  }
  return Json{{"nodes", to_json(u, std::span<const KauffmanState>(lattice.nodes))},
              {"moves", moves},
              {"clocked", lattice.clocked},
              {"counterclocked", lattice.counterclocked}};
}

Json to_json(const LatticePoint& x) {
  Json out = Json::array();
  for (int c : x) out.push_back(c);
  return out;
}

Json to_json(const Simplex& s) {
  Json vertices = Json::array();
  for (const auto& v : s.vertices) vertices.push_back(to_json(v));
  return Json{{"edges", s.edges}, {"vertices", vertices}, {"normalized_volume", to_json(s.normalized_volume)}};
}

}  // namespace kdet
