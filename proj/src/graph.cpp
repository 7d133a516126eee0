#include "kdet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "kdet/error.hpp"

namespace kdet {
namespace {

bool union_find_connected(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& links) {
  if (count == 0) return true;
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = count;
  for (const auto& [a, b] : links) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::size_t DirectedMultigraph::outdegree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(), [v](const auto& a) { return a.first == v; }));
}

std::size_t DirectedMultigraph::indegree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(), [v](const auto& a) { return a.second == v; }));
}

bool DirectedMultigraph::balanced() const {
  std::vector<long> excess(vertex_count, 0);
  for (const auto& [t, h] : arcs) {
    ++excess[t];
    --excess[h];
  }
  return std::all_of(excess.begin(), excess.end(), [](long x) { return x == 0; });
}

bool DirectedMultigraph::weakly_connected() const { return union_find_connected(vertex_count, arcs); }

bool BipartiteGraph::connected() const {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  links.reserve(edges.size());
  for (const auto& [e, v] : edges) links.emplace_back(e, e_count + v);
  return union_find_connected(vertex_count(), links);
}

BipartiteGraph parse_bipartite_edges(std::string_view text) {
  BipartiteGraph g;
  std::size_t line_no = 0;
  auto parse_index = [&](std::string_view tok, char prefix) {
    const std::string where = "line " + std::to_string(line_no);
    if (tok.size() < 2 || tok.front() != prefix) {
      throw Error(ErrorCode::MalformedLine, where + ": expected '" + std::string(1, prefix) + "<index>'");
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::MalformedLine, where + ": bad index '" + std::string(tok) + "'");
    }
    return value;
  };
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": expected 'e<i> v<j>'");
    }
    const std::size_t e = parse_index(tokens[0], 'e');
    const std::size_t v = parse_index(tokens[1], 'v');
    g.e_count = std::max(g.e_count, e + 1);
    g.v_count = std::max(g.v_count, v + 1);
    g.edges.emplace_back(e, v);
  }
  return g;
}

}  // namespace kdet
