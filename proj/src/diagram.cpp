#include "kdet/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "kdet/error.hpp"

namespace kdet {
namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

DartId LinkDiagram::partner(DartId d) const {
  const auto [a, b] = edge_darts_[crossings_[crossing_of(d)].edges[position_of(d)]];
  return a == d ? b : a;
}

LinkDiagram LinkDiagram::from_quadruples(std::span<const std::array<std::uint64_t, 4>> quads) {
  if (quads.empty()) throw Error(ErrorCode::EmptyDiagram, "a diagram needs at least one crossing");

  LinkDiagram d;
  const std::size_t n = quads.size();
  std::map<std::uint64_t, EdgeId> internal;
  std::vector<std::vector<DartId>> uses;
  d.crossings_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    d.crossings_[x].id = x;
    d.crossings_[x].labels = quads[x];
    for (std::size_t p = 0; p < 4; ++p) {
      const std::uint64_t label = quads[x][p];
      if (label == 0) throw Error(ErrorCode::MalformedLine, "edge labels must be positive");
      auto [it, fresh] = internal.try_emplace(label, internal.size());
      if (fresh) uses.emplace_back();
      d.crossings_[x].edges[p] = it->second;
      uses[it->second].push_back(dart(x, p));
    }
  }
  for (const auto& [label, e] : internal) {
    if (uses[e].size() != 2) {
      throw Error(ErrorCode::BadEdgeMultiplicity, "edge label " + std::to_string(label) + " appears " +
                                                      std::to_string(uses[e].size()) + " times");
    }
  }
  d.edge_darts_.resize(uses.size());
  for (EdgeId e = 0; e < uses.size(); ++e) d.edge_darts_[e] = {uses[e][0], uses[e][1]};

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : d.edge_darts_) {
    parent[find_root(parent, crossing_of(a))] = find_root(parent, crossing_of(b));
  }
  for (std::size_t x = 1; x < n; ++x) {
    if (find_root(parent, x) != find_root(parent, 0)) {
      throw Error(ErrorCode::Disconnected, "crossing " + std::to_string(x + 1) +
                                               " is not connected to crossing 1");
    }
  }

  // Strand walk: entering at position p leaves at p + 2. Components through an
  // under-pass are started at position 0 so that their direction is the PD one.
  std::vector<bool> entered(4 * n, false);
  d.over_entry_.assign(n, 0);
  auto walk = [&](DartId start) {
    StrandComponent comp;
    DartId in = start;
    do {
      const CrossingId x = crossing_of(in);
      const std::size_t p = position_of(in);
      if (p == 2) {
        throw Error(ErrorCode::InconsistentOrientation,
                    "an under-strand enters crossing " + std::to_string(x + 1) +
                        " through its third entry; the first entry must be the incoming under-strand");
      }
      entered[in] = true;
      entered[dart(x, p + 2)] = true;
      if (p % 2 == 1) d.over_entry_[x] = p;
      comp.entries.push_back(in);
      in = d.partner(dart(x, p + 2));
    } while (in != start);
    d.components_.push_back(std::move(comp));
  };
  for (CrossingId x = 0; x < n; ++x) {
    if (!entered[dart(x, 0)]) walk(dart(x, 0));
  }
  for (CrossingId x = 0; x < n; ++x) {
    if (!entered[dart(x, 1)]) walk(dart(x, 1));
  }
  return d;
}

std::string LinkDiagram::to_pd_text() const {
  std::ostringstream out;
  for (const auto& c : crossings_) {
    out << 'X';
    for (auto label : c.labels) out << ' ' << label;
    out << '\n';
  }
  return out.str();
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<std::uint64_t, 4>> quads;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tokens.size() != 5) {
      throw Error(ErrorCode::MalformedLine, where + ": expected 'X a b c d', got " +
                                                std::to_string(tokens.size()) + " tokens");
    }
    if (tokens[0] != "X") throw Error(ErrorCode::MalformedLine, where + ": line must start with X");
    std::array<std::uint64_t, 4> q{};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto tok = tokens[i + 1];
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), q[i]);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || q[i] == 0) {
        throw Error(ErrorCode::MalformedLine,
                    where + ": '" + std::string(tok) + "' is not a positive integer");
      }
    }
    quads.push_back(q);
  }
  return LinkDiagram::from_quadruples(quads);
}

bool check_alternating(const LinkDiagram& d) {
  for (const auto& comp : d.components()) {
    const auto& v = comp.entries;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const bool under = position_of(v[i]) % 2 == 0;
      const bool next_under = position_of(v[(i + 1) % v.size()]) % 2 == 0;
      if (under == next_under) return false;
    }
  }
  return true;
}

std::pair<RegionId, RegionId> Universe::edge_sides(EdgeId e) const {
  const DartId d = edge_darts_[e].first;
  const CrossingId x = crossing_of(d);
  const std::size_t p = position_of(d);
  return {corner_region_[corner(x, p + 3)], corner_region_[corner(x, p)]};
}

std::vector<RegionId> Universe::neighbors(RegionId r) const {
  std::vector<RegionId> out;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const auto [a, b] = edge_sides(e);
    if (a == r) out.push_back(b);
    if (b == r) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RegionId Universe::outer_region() const {
  RegionId best = 0;
  for (const auto& r : regions_) {
    if (r.boundary.size() > regions_[best].boundary.size()) best = r.id;
  }
  return best;
}

Universe build_universe(const LinkDiagram& d) {
  Universe u;
  const std::size_t n = d.n();
  u.n_ = n;
  u.pairing_.resize(4 * n);
  u.edge_of_dart_.resize(4 * n);
  u.edge_darts_.resize(d.edge_count());
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const auto [a, b] = d.darts_of_edge(e);
    u.pairing_[a] = b;
    u.pairing_[b] = a;
    u.edge_of_dart_[a] = u.edge_of_dart_[b] = e;
    u.edge_darts_[e] = {a, b};
  }

  // Corner i of x lies clockwise of dart i + 1. Leaving along that dart keeps
  // the face on the right; at the far end the face continues in the corner
  // counterclockwise-before the arriving dart, which is corner q of that crossing.
  constexpr RegionId unassigned = static_cast<RegionId>(-1);
  u.corner_region_.assign(4 * n, unassigned);
  for (CornerId start = 0; start < 4 * n; ++start) {
    if (u.corner_region_[start] != unassigned) continue;
    Region r;
    r.id = u.regions_.size();
    CornerId c = start;
    while (u.corner_region_[c] == unassigned) {
      u.corner_region_[c] = r.id;
      r.corners.push_back(c);
      r.incident_crossings.push_back(crossing_of(c));
      const DartId out = dart(crossing_of(c), position_of(c) + 1);
      r.boundary.push_back(out);
      const DartId in = u.pairing_[out];
      c = corner(crossing_of(in), position_of(in));
    }
    std::sort(r.incident_crossings.begin(), r.incident_crossings.end());
    r.incident_crossings.erase(std::unique(r.incident_crossings.begin(), r.incident_crossings.end()),
                               r.incident_crossings.end());
    u.regions_.push_back(std::move(r));
  }
  if (u.regions_.size() != n + 2) {
    throw Error(ErrorCode::NonPlanarEmbedding, "face walk found " + std::to_string(u.regions_.size()) +
                                                   " regions, a plane diagram with " + std::to_string(n) +
                                                   " crossings has " + std::to_string(n + 2));
  }
  return u;
}

}  // namespace kdet
