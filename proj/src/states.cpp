#include "kdet/states.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "kdet/error.hpp"

namespace kdet {

StarPlacement default_stars(const Universe& u) {
  const auto [right, left] = u.edge_sides(0);
  return {std::min(right, left), std::max(right, left)};
}

std::vector<StarPlacement> adjacent_region_pairs(const Universe& u) {
  std::vector<StarPlacement> out;
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const auto [a, b] = u.edge_sides(e);
    if (a != b) out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RegionId> KauffmanState::regions(const Universe& u) const {
  std::vector<RegionId> out(corner.size());
  for (CrossingId x = 0; x < corner.size(); ++x) out[x] = region(u, x);
  return out;
}

bool is_valid_state(const Universe& u, const StarPlacement& s, const KauffmanState& st) {
  if (st.corner.size() != u.vertex_count()) return false;
  std::vector<bool> used(u.region_count(), false);
  for (CrossingId x = 0; x < st.corner.size(); ++x) {
    if (st.corner[x] > 3) return false;
    const RegionId r = st.region(u, x);
    if (s.contains(r) || used[r]) return false;
    used[r] = true;
  }
  return true;
}

std::vector<KauffmanState> enumerate_states(const Universe& u, const StarPlacement& s) {
  const std::size_t n = u.vertex_count();
  std::vector<KauffmanState> out;
  std::vector<bool> used(u.region_count(), false);
  used[s.first] = used[s.second] = true;
  KauffmanState cur;
  cur.corner.assign(n, 0);

  auto search = [&](auto&& self, CrossingId x) -> void {
    if (x == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint8_t i = 0; i < 4; ++i) {
      const RegionId r = u.region_of(corner(x, i));
      if (used[r]) continue;
      used[r] = true;
      cur.corner[x] = i;
      self(self, x + 1);
      used[r] = false;
    }
  };
  search(search, 0);

  std::vector<std::pair<std::vector<RegionId>, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].regions(u), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return out[a.second] < out[b.second];
  });
  std::vector<KauffmanState> sorted;
  sorted.reserve(out.size());
  for (const auto& k : keyed) sorted.push_back(std::move(out[k.second]));
  return sorted;
}

std::vector<ClockMove> clock_moves(const Universe& u, const StarPlacement&, const KauffmanState& st) {
  // Edge e leaves x through position p and reaches y at position q. Corner p
  // of x and corner q - 1 of y lie on one side, corners p - 1 and q on the
  // other. A clockwise move carries both markers one corner clockwise across e.
  std::vector<ClockMove> moves;
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const auto [a, b] = u.darts_of_edge(e);
    const CrossingId x = crossing_of(a), y = crossing_of(b);
    if (x == y) continue;
    const auto p = static_cast<std::uint8_t>(position_of(a));
    const auto q = static_cast<std::uint8_t>(position_of(b));
    const auto before = [](std::uint8_t i) { return static_cast<std::uint8_t>((i + 3) % 4); };
    if (st.corner[x] == p && st.corner[y] == q) {
      ClockMove m{ClockDirection::clockwise, e, st};
      m.successor.corner[x] = before(p);
      m.successor.corner[y] = before(q);
      moves.push_back(std::move(m));
    } else if (st.corner[x] == before(p) && st.corner[y] == before(q)) {
      ClockMove m{ClockDirection::counterclockwise, e, st};
      m.successor.corner[x] = p;
      m.successor.corner[y] = q;
      moves.push_back(std::move(m));
    }
  }
  return moves;
}

ClockLattice clock_lattice(const Universe& u, const StarPlacement& s) {
  ClockLattice lat;
  lat.nodes = enumerate_states(u, s);
  if (lat.nodes.empty()) throw Error(ErrorCode::ClockTheoremViolation, "the star placement admits no state");
  std::map<KauffmanState, std::size_t> index;
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) index.emplace(lat.nodes[i], i);

  std::vector<bool> has_cw(lat.nodes.size(), false), has_ccw(lat.nodes.size(), false);
  std::vector<std::vector<std::size_t>> adj(lat.nodes.size());
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    for (auto& m : clock_moves(u, s, lat.nodes[i])) {
      const auto it = index.find(m.successor);
      if (it == index.end()) {
        throw Error(ErrorCode::ClockTheoremViolation, "a clock move left the state set");
      }
      lat.moves.push_back({i, it->second, m.direction, m.across});
      (m.direction == ClockDirection::clockwise ? has_cw : has_ccw)[i] = true;
      adj[i].push_back(it->second);
      adj[it->second].push_back(i);
    }
  }

  std::vector<bool> seen(lat.nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (auto j : adj[i]) {
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != lat.nodes.size()) {
    throw Error(ErrorCode::ClockTheoremViolation, "clock lattice is disconnected (" + std::to_string(reached) +
                                                      " of " + std::to_string(lat.nodes.size()) + " states reached)");
  }

  std::vector<std::size_t> clocked, counterclocked;
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    if (!has_ccw[i]) clocked.push_back(i);
    if (!has_cw[i]) counterclocked.push_back(i);
  }
  if (clocked.size() != 1 || counterclocked.size() != 1) {
    throw Error(ErrorCode::ClockTheoremViolation,
                std::to_string(clocked.size()) + " clocked and " + std::to_string(counterclocked.size()) +
                    " counterclocked states; expected exactly one of each");
  }
  lat.clocked = clocked.front();
  lat.counterclocked = counterclocked.front();
  return lat;
}

}  // namespace kdet
