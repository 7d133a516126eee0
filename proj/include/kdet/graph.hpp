#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace kdet {

using VertexId = std::size_t;
using ArcId = std::size_t;

struct DirectedMultigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs;  // (tail, head), parallel arcs allowed
  bool allow_loops = false;

  std::size_t outdegree(VertexId v) const;
  std::size_t indegree(VertexId v) const;
  bool balanced() const;
  // Connected when arc directions are ignored.
  bool weakly_connected() const;
};

// Bipartite multigraph with color classes E and V. Vertex i of E and vertex j
// of V are numbered i and e_count + j when the graph is read as undirected.
struct BipartiteGraph {
  std::size_t e_count = 0;
  std::size_t v_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (E index, V index)

  std::size_t vertex_count() const { return e_count + v_count; }
  bool connected() const;
};

// Edge-list text: one edge per line as "e<i> v<j>" (0-based), '#' comments
// and blank lines ignored. Throws Error(MalformedLine).
BipartiteGraph parse_bipartite_edges(std::string_view text);

}  // namespace kdet
