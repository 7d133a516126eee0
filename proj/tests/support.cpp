#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kdet::testing {

std::string fixture_path(const std::string& name) { return std::string(KDET_FIXTURE_DIR) + "/" + name; }

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinkDiagram load_pd(const std::string& name) { return parse_pd(read_fixture(name)); }

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"trefoil.pd", 3, 1}, {"figure_eight.pd", 5, 1}, {"hopf.pd", 2, 2},
      {"5_1.pd", 5, 1},     {"5_2.pd", 7, 1},          {"6_1.pd", 9, 1},
  };
  return entries;
}

std::vector<std::array<std::uint64_t, 4>> braid_closure(std::size_t strands, const std::vector<int>& word) {
  std::vector<std::uint64_t> current(strands);
  std::iota(current.begin(), current.end(), 1);
  std::uint64_t next = strands + 1;
  std::vector<std::array<std::uint64_t, 4>> quads;
  for (int g : word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
    const std::uint64_t left_in = current[i], right_in = current[i + 1];
    const std::uint64_t left_out = next++, right_out = next++;
    if (g > 0) {
      quads.push_back({right_in, right_out, left_out, left_in});
    } else {
      quads.push_back({left_in, right_in, right_out, left_out});
    }
    current[i] = left_out;
    current[i + 1] = right_out;
  }
  // Closing strands identify the top label at each position with the bottom one.
  for (auto& q : quads) {
    for (auto& label : q) {
      for (std::size_t p = 0; p < strands; ++p) {
        if (label == current[p]) label = p + 1;
      }
    }
  }
  return quads;
}

std::vector<int> random_braid_word(std::mt19937& rng, std::size_t strands, std::size_t length, bool alternating) {
  if (strands < 2 || length < 2 * (strands - 1)) throw std::invalid_argument("braid word too short");
  std::uniform_int_distribution<int> pick(1, static_cast<int>(strands) - 1);
  std::vector<int> gens;
  for (int i = 1; i < static_cast<int>(strands); ++i) gens.insert(gens.end(), {i, i});
  while (gens.size() < length) gens.push_back(pick(rng));
  std::shuffle(gens.begin(), gens.end(), rng);
  std::bernoulli_distribution coin;
  for (int& g : gens) {
    const bool positive = alternating ? (g % 2 == 0) : coin(rng);
    if (!positive) g = -g;
  }
  return gens;
}

DirectedMultigraph random_eulerian_digraph(std::mt19937& rng, std::size_t vertices, std::size_t extra_cycles) {
  DirectedMultigraph g;
  g.vertex_count = vertices;
  std::vector<VertexId> order(vertices);
  std::iota(order.begin(), order.end(), 0);
  auto add_cycle = [&](const std::vector<VertexId>& cyc) {
    for (std::size_t i = 0; i < cyc.size(); ++i) g.arcs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  };
  std::shuffle(order.begin(), order.end(), rng);
  if (vertices > 1) add_cycle(order);
  std::uniform_int_distribution<std::size_t> len(2, std::max<std::size_t>(2, vertices));
  for (std::size_t c = 0; c < extra_cycles && vertices > 1; ++c) {
    std::shuffle(order.begin(), order.end(), rng);
    add_cycle(std::vector<VertexId>(order.begin(), order.begin() + static_cast<long>(len(rng))));
  }
  return g;
}

DirectedMultigraph random_digraph(std::mt19937& rng, std::size_t vertices, std::size_t arcs) {
  DirectedMultigraph g;
  g.vertex_count = vertices;
  std::uniform_int_distribution<VertexId> v(0, vertices - 1);
  for (VertexId x = 1; x < vertices; ++x) {
    const VertexId y = std::uniform_int_distribution<VertexId>(0, x - 1)(rng);
    if (std::bernoulli_distribution()(rng)) {
      g.arcs.emplace_back(x, y);
    } else {
      g.arcs.emplace_back(y, x);
    }
  }
  while (g.arcs.size() < arcs) {
    const VertexId a = v(rng), b = v(rng);
    if (a != b) g.arcs.emplace_back(a, b);
  }
  return g;
}

BipartiteGraph random_bipartite(std::mt19937& rng, std::size_t e_count, std::size_t v_count, std::size_t extra) {
  BipartiteGraph g;
  g.e_count = e_count;
  g.v_count = v_count;
  auto pick = [&](const std::vector<std::size_t>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  std::vector<std::size_t> rest_e(e_count), rest_v(v_count);
  std::iota(rest_e.begin(), rest_e.end(), 0);
  std::iota(rest_v.begin(), rest_v.end(), 0);
  std::shuffle(rest_e.begin(), rest_e.end(), rng);
  std::shuffle(rest_v.begin(), rest_v.end(), rng);
  std::vector<std::size_t> placed_e{rest_e.back()}, placed_v{rest_v.back()};
  rest_e.pop_back();
  rest_v.pop_back();
  g.edges.emplace_back(placed_e.front(), placed_v.front());
  // Attach the remaining vertices one by one to a placed vertex of the other class.
  while (!rest_e.empty() || !rest_v.empty()) {
    const bool take_e = rest_v.empty() || (!rest_e.empty() && std::bernoulli_distribution()(rng));
    if (take_e) {
      g.edges.emplace_back(rest_e.back(), pick(placed_v));
      placed_e.push_back(rest_e.back());
      rest_e.pop_back();
    } else {
      g.edges.emplace_back(pick(placed_e), rest_v.back());
      placed_v.push_back(rest_v.back());
      rest_v.pop_back();
    }
  }
  std::uniform_int_distribution<std::size_t> pe(0, e_count - 1), pv(0, v_count - 1);
  for (std::size_t k = 0; k < extra; ++k) g.edges.emplace_back(pe(rng), pv(rng));
  return g;
}

BigInt cofactor_determinant(const Matrix<BigInt>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix<BigInt> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][c] * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

BigInt permanent(const Matrix<int>& m) {
  const std::size_t n = m.size();
  std::vector<bool> used(n, false);
  std::function<BigInt(std::size_t)> go = [&](std::size_t row) -> BigInt {
    if (row == n) return 1;
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || m[row][c] == 0) continue;
      used[c] = true;
      total += m[row][c] * go(row + 1);
      used[c] = false;
    }
    return total;
  };
  return go(0);
}

BigInt brute_force_arborescences(const DirectedMultigraph& g, VertexId root) {
  std::vector<std::vector<ArcId>> out(g.vertex_count);
  for (ArcId a = 0; a < g.arcs.size(); ++a) {
    if (g.arcs[a].first != g.arcs[a].second) out[g.arcs[a].first].push_back(a);
  }
  std::vector<ArcId> choice(g.vertex_count);
  BigInt count = 0;
  std::function<void(VertexId)> go = [&](VertexId v) {
    if (v == g.vertex_count) {
      for (VertexId s = 0; s < g.vertex_count; ++s) {
        VertexId x = s;
        for (std::size_t steps = 0; x != root; ++steps) {
          if (steps > g.vertex_count) return;
          x = g.arcs[choice[x]].second;
        }
      }
      ++count;
      return;
    }
    if (v == root) {
      go(v + 1);
      return;
    }
    for (ArcId a : out[v]) {
      choice[v] = a;
      go(v + 1);
    }
  };
  go(0);
  return count;
}

BigInt brute_force_eulerian_tours(const DirectedMultigraph& g, ArcId fixed) {
  std::vector<bool> used(g.arcs.size(), false);
  const VertexId start = g.arcs[fixed].first;
  BigInt count = 0;
  std::function<void(VertexId, std::size_t)> go = [&](VertexId at, std::size_t done) {
    if (done == g.arcs.size()) {
      if (at == start) ++count;
      return;
    }
    for (ArcId a = 0; a < g.arcs.size(); ++a) {
      if (used[a] || g.arcs[a].first != at) continue;
      used[a] = true;
      go(g.arcs[a].second, done + 1);
      used[a] = false;
    }
  };
  used[fixed] = true;
  go(g.arcs[fixed].second, 1);
  return count;
}

std::size_t brute_force_colourings(const Universe& u, RegionId white) {
  const std::size_t f = u.region_count();
  std::size_t proper = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    if (mask >> white & 1U) continue;
    bool ok = true;
    for (EdgeId e = 0; e < u.edge_count() && ok; ++e) {
      const auto [a, b] = u.edge_sides(e);
      ok = ((mask >> a) & 1U) != ((mask >> b) & 1U);
    }
    if (ok) ++proper;
  }
  return proper;
}

bool is_composite(const Universe& u) {
  const std::size_t n = u.vertex_count();
  for (EdgeId a = 0; a < u.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < u.edge_count(); ++b) {
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      std::size_t parts = n;
      for (EdgeId e = 0; e < u.edge_count(); ++e) {
        if (e == a || e == b) continue;
        const auto [d1, d2] = u.darts_of_edge(e);
        const auto r1 = find(crossing_of(d1)), r2 = find(crossing_of(d2));
        if (r1 != r2) {
          parent[r1] = r2;
          --parts;
        }
      }
      if (parts > 1) return true;
    }
  }
  // A loop edge is a one-crossing summand.
  for (EdgeId e = 0; e < u.edge_count(); ++e) {
    const auto [d1, d2] = u.darts_of_edge(e);
    if (crossing_of(d1) == crossing_of(d2) && n > 1) return true;
  }
  return false;
}

Matrix<int> state_incidence(const Universe& u, const StarPlacement& s) {
  std::vector<RegionId> free;
  for (RegionId r = 0; r < u.region_count(); ++r) {
    if (!s.contains(r)) free.push_back(r);
  }
  Matrix<int> m(u.vertex_count(), std::vector<int>(free.size(), 0));
  for (CrossingId x = 0; x < u.vertex_count(); ++x) {
    for (std::size_t i = 0; i < 4; ++i) {
      const RegionId r = u.region_of(corner(x, i));
      const auto it = std::find(free.begin(), free.end(), r);
      if (it != free.end()) ++m[x][static_cast<std::size_t>(it - free.begin())];
    }
  }
  return m;
}

}  // namespace kdet::testing
