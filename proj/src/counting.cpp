#include "kdet/counting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "kdet/error.hpp"

namespace kdet {
namespace {

void require_loop_policy(const DirectedMultigraph& g) {
  if (g.allow_loops) return;
  for (const auto& [t, h] : g.arcs) {
    if (t == h) throw std::invalid_argument("digraph has a loop but allow_loops is not set");
  }
}

void require_eulerian(const DirectedMultigraph& g) {
  if (!g.balanced()) throw Error(ErrorCode::NotEulerian, "some vertex has indegree != outdegree");
  if (!g.weakly_connected()) throw Error(ErrorCode::NotEulerian, "the digraph is disconnected");
}

}  // namespace

BigInt arborescence_count(const DirectedMultigraph& g, VertexId root) {
  require_loop_policy(g);
  if (root >= g.vertex_count) throw std::out_of_range("root is not a vertex");
  Matrix<BigInt> lap(g.vertex_count, std::vector<BigInt>(g.vertex_count, 0));
  for (const auto& [t, h] : g.arcs) {
    if (t == h) continue;  // a loop never lies in a tree
    lap[t][t] += 1;
    lap[t][h] -= 1;
  }
  Matrix<BigInt> minor;
  for (VertexId i = 0; i < g.vertex_count; ++i) {
    if (i == root) continue;
    std::vector<BigInt> row;
    for (VertexId j = 0; j < g.vertex_count; ++j) {
      if (j != root) row.push_back(lap[i][j]);
    }
    minor.push_back(std::move(row));
  }
  return bareiss_determinant(std::move(minor));
}

std::vector<Arborescence> arborescence_enumerate(const DirectedMultigraph& g, VertexId root,
                                                 const GuardLimits& guard) {
  require_loop_policy(g);
  if (g.vertex_count > guard.max_vertices || g.arcs.size() > guard.max_arcs) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count) + " vertices / " +
                                         std::to_string(g.arcs.size()) + " arcs exceed the enumeration guard");
  }
  std::vector<std::vector<ArcId>> out_arcs(g.vertex_count);
  for (ArcId a = 0; a < g.arcs.size(); ++a) {
    if (g.arcs[a].first != g.arcs[a].second) out_arcs[g.arcs[a].first].push_back(a);
  }
  constexpr VertexId none = static_cast<VertexId>(-1);
  std::vector<VertexId> next(g.vertex_count, none);
  std::vector<ArcId> chosen;
  std::vector<Arborescence> result;

  auto creates_cycle = [&](VertexId from, VertexId to) {
    for (VertexId w = to; w != root && w != none; w = next[w]) {
      if (w == from) return true;
    }
    return false;
  };
  auto search = [&](auto&& self, VertexId v) -> void {
    if (v == g.vertex_count) {
      result.push_back({root, chosen});
      return;
    }
    if (v == root) {
      self(self, v + 1);
      return;
    }
    for (ArcId a : out_arcs[v]) {
      const VertexId w = g.arcs[a].second;
      if (creates_cycle(v, w)) continue;
      next[v] = w;
      chosen.push_back(a);
      self(self, v + 1);
      chosen.pop_back();
      next[v] = none;
    }
  };
  search(search, 0);
  return result;
}

BigInt eulerian_tour_count(const DirectedMultigraph& g, ArcId fixed) {
  if (fixed >= g.arcs.size()) throw std::out_of_range("fixed arc is not an arc");
  require_eulerian(g);
  BigInt count = arborescence_count(g, g.arcs[fixed].first);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    const auto d = g.outdegree(v);
    if (d > 0) count *= factorial(static_cast<unsigned>(d - 1));
  }
  return count;
}

RootIndependenceReport root_independence_check(const DirectedMultigraph& g) {
  require_eulerian(g);
  RootIndependenceReport r;
  for (VertexId v = 0; v < g.vertex_count; ++v) r.per_root.push_back(arborescence_count(g, v));
  r.passed = std::adjacent_find(r.per_root.begin(), r.per_root.end(), std::not_equal_to<>()) == r.per_root.end();
  return r;
}

BigInt spanning_tree_count(const BipartiteGraph& g) {
  const std::size_t nv = g.vertex_count();
  if (nv == 0) return 0;
  Matrix<BigInt> lap(nv, std::vector<BigInt>(nv, 0));
  for (const auto& [e, v] : g.edges) {
    const std::size_t a = e, b = g.e_count + v;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  Matrix<BigInt> minor;
  for (std::size_t i = 1; i < nv; ++i) minor.emplace_back(lap[i].begin() + 1, lap[i].end());
  return bareiss_determinant(std::move(minor));
}

std::vector<std::vector<std::size_t>> spanning_tree_enumerate(const BipartiteGraph& g, const GuardLimits& guard) {
  const std::size_t nv = g.vertex_count();
  if (nv > guard.max_vertices || g.edges.size() > guard.max_arcs) {
    throw Error(ErrorCode::TooLarge, std::to_string(nv) + " vertices / " + std::to_string(g.edges.size()) +
                                         " edges exceed the enumeration guard");
  }
  std::vector<std::vector<std::size_t>> trees;
  if (nv == 0) return trees;
  const std::size_t need = nv - 1;

  // Union-find without path compression so that unions can be rolled back.
  std::vector<std::size_t> parent(nv), size(nv, 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (chosen.size() == need) {
      trees.push_back(chosen);
      return;
    }
    if (g.edges.size() - i < need - chosen.size()) return;
    const auto [e, v] = g.edges[i];
    std::size_t a = find(e), b = find(g.e_count + v);
    if (a != b) {
      if (size[a] < size[b]) std::swap(a, b);
      parent[b] = a;
      size[a] += size[b];
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      size[a] -= size[b];
      parent[b] = b;
    }
    self(self, i + 1);
  };
  search(search, 0);
  return trees;
}

std::vector<Hypertree> hypertree_set(const BipartiteGraph& g, ColorClass cls,
                                     const std::vector<std::vector<std::size_t>>& trees) {
  std::set<Hypertree> found;
  const std::size_t width = cls == ColorClass::E ? g.e_count : g.v_count;
  for (const auto& tree : trees) {
    Hypertree h{cls, std::vector<int>(width, -1)};
    for (auto i : tree) ++h.degrees[cls == ColorClass::E ? g.edges[i].first : g.edges[i].second];
    found.insert(std::move(h));
  }
  return {found.begin(), found.end()};
}

std::vector<Hypertree> hypertree_set(const BipartiteGraph& g, ColorClass cls, const GuardLimits& guard) {
  return hypertree_set(g, cls, spanning_tree_enumerate(g, guard));
}

}  // namespace kdet
