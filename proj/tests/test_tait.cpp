#include <doctest.h>

#include <algorithm>
#include <set>

#include "kdet/error.hpp"
#include "kdet/tait.hpp"
#include "support.hpp"

using namespace kdet;
using namespace kdet::testing;

TEST_CASE("trefoil checkerboard: three black bigons, two white triangles") {
  const auto u = build_universe(load_pd("trefoil.pd"));
  const auto c = checkerboard(u);
  CHECK(c.of(c.outer) == Color::white);
  CHECK(c.count(Color::black) == 3);
  CHECK(c.count(Color::white) == 2);
  CHECK(u.region(c.outer).boundary.size() == 3);
  CHECK(brute_force_colourings(u, c.outer) == 1);
  for (RegionId r = 0; r < u.region_count(); ++r) {
    CHECK((c.of(r) == Color::black) == (u.region(r).boundary.size() == 2));
  }
  const auto other = checkerboard(u, Color::black);
  CHECK(other.count(Color::black) == 2);
  CHECK(other.count(Color::white) == 3);
}

TEST_CASE("hopf checkerboard: two and two") {
  const auto u = build_universe(load_pd("hopf.pd"));
  const auto c = checkerboard(u);
  CHECK(c.count(Color::black) == 2);
  CHECK(c.count(Color::white) == 2);
  CHECK(brute_force_colourings(u, c.outer) == 1);
}

TEST_CASE("colouring is proper and unique on the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.file);
    const auto u = build_universe(load_pd(entry.file));
    const auto c = checkerboard(u);
    CHECK_NOTHROW(validate_coloring(u, c));
    CHECK(brute_force_colourings(u, c.outer) == 1);
    for (EdgeId e = 0; e < u.edge_count(); ++e) {
      const auto [right, left] = u.edge_sides(e);
      CHECK(c.of(right) != c.of(left));
    }
  }
}

TEST_CASE("swapped colours break the white-outside convention") {
  const auto u = build_universe(load_pd("trefoil.pd"));
  auto c = checkerboard(u);
  for (auto& col : c.color) col = col == Color::white ? Color::black : Color::white;
  try {
    validate_coloring(u, c);
    FAIL("expected OuterNotWhite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OuterNotWhite);
  }
  auto broken = checkerboard(u);
  broken.color[u.neighbors(broken.outer).front()] = Color::white;
  try {
    validate_coloring(u, broken);
    FAIL("expected NotBipartiteFaces");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBipartiteFaces);
  }
}

TEST_CASE("trefoil Tait graph is K_{3,2} with every bigon meeting both triangles") {
  const auto u = build_universe(load_pd("trefoil.pd"));
  const auto g = tait_graph(u, checkerboard(u));
  CHECK(g.black_regions.size() == 3);
  CHECK(g.white_regions.size() == 2);
  REQUIRE(g.edges.size() == 6);
  std::multiset<std::pair<RegionId, RegionId>> pairs;
  for (const auto& e : g.edges) pairs.emplace(e.black, e.white);
  for (auto b : g.black_regions) {
    for (auto w : g.white_regions) CHECK(pairs.count({b, w}) == 1);
  }
  CHECK(g.bipartite().connected());
}

TEST_CASE("hopf Tait graph: a 4-cycle on two plus two regions") {
  const auto u = build_universe(load_pd("hopf.pd"));
  const auto g = tait_graph(u, checkerboard(u));
  const auto bip = g.bipartite();
  CHECK(bip.e_count == 2);
  CHECK(bip.v_count == 2);
  CHECK(bip.edges.size() == 4);
  CHECK(bip.connected());
}

TEST_CASE("Tait edges match the region incidence of each universe edge") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.file);
    const auto u = build_universe(load_pd(entry.file));
    const auto c = checkerboard(u);
    const auto g = tait_graph(u, c);
    CHECK(g.edges.size() == 2 * u.vertex_count());
    for (EdgeId e = 0; e < u.edge_count(); ++e) {
      const auto [right, left] = u.edge_sides(e);
      const std::set<RegionId> sides{right, left};
      CHECK(sides == std::set<RegionId>{g.edges[e].black, g.edges[e].white});
      CHECK(c.of(g.edges[e].black) == Color::black);
    }
  }
}

TEST_CASE("oriented universe is balanced with black on the right") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.file);
    const auto u = build_universe(load_pd(entry.file));
    const auto c = checkerboard(u);
    const auto du = orient_universe(u, c);
    CHECK(du.arcs.size() == 2 * u.vertex_count());
    CHECK(du.balanced());
    for (CrossingId x = 0; x < du.vertex_count; ++x) {
      CHECK(du.outdegree(x) == 2);
      CHECK(du.indegree(x) == 2);
    }
    for (const auto& arc : du.arcs) {
      // The region right of a dart leaving position p is corner p - 1.
      const RegionId right = u.region_of(corner(crossing_of(arc.source), position_of(arc.source) + 3));
      CHECK(crossing_of(arc.source) == arc.tail);
      CHECK(c.of(right) == Color::black);
    }
  }
}

TEST_CASE("dual edge map is a bijection of size 2n") {
  for (const char* name : {"trefoil.pd", "hopf.pd", "6_1.pd"}) {
    CAPTURE(name);
    const auto u = build_universe(load_pd(name));
    const auto c = checkerboard(u);
    const auto g = tait_graph(u, c);
    const auto du = orient_universe(u, c);
    const auto m = dual_edge_map(u, g, du);
    CHECK(m.tait_to_arc.size() == 2 * u.vertex_count());
    for (std::size_t i = 0; i < m.tait_to_arc.size(); ++i) CHECK(m.arc_to_tait[m.tait_to_arc[i]] == i);
  }
}

TEST_CASE("the other Tait graph also orients to a balanced digraph") {
  const auto u = build_universe(load_pd("5_2.pd"));
  const auto c = checkerboard(u, Color::black);
  CHECK(orient_universe(u, c).balanced());
}
