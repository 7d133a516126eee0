#include "kdet/certificate.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <functional>

#include "kdet/counting.hpp"
#include "kdet/polytope.hpp"
#include "kdet/states.hpp"

namespace kdet {
namespace {

Json optional_json(const std::optional<BigInt>& x) { return x ? to_json(*x) : Json(nullptr); }

template <class T>
Json optional_plain(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

// Runs one stage; library errors become violations and the stage's outputs
// stay unset.
bool stage(std::vector<std::string>& violations, const std::function<void()>& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    violations.emplace_back(e.what());
  }
  return false;
}

}  // namespace

std::string diagram_hash(const LinkDiagram& d) {
  const std::string text = d.to_pd_text();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Certificate certify(const LinkDiagram& d, const CertificateOptions& options) {
  Certificate cert;
  auto& bad = cert.violations;
  cert.diagram_hash = diagram_hash(d);
  cert.crossings = d.n();
  cert.components = d.component_count();
  cert.alternating = check_alternating(d);
  const bool knot = d.component_count() == 1;

  std::optional<Universe> u;
  if (!stage(bad, [&] { u = build_universe(d); })) return cert;
  cert.regions = u->region_count();
  if (*cert.regions != d.n() + 2) {
    bad.push_back("NonPlanarEmbedding: " + std::to_string(*cert.regions) + " regions for " + std::to_string(d.n()) +
                  " crossings");
  }

  std::optional<FaceColoring> coloring;
  if (!stage(bad, [&] {
        coloring = checkerboard(*u, options.outer_color);
        if (options.outer_color == Color::white) validate_coloring(*u, *coloring);
      })) {
    return cert;
  }
  const TaitGraph g = tait_graph(*u, *coloring);
  const DirectedUniverse du = orient_universe(*u, *coloring);
  cert.black_regions = g.black_regions.size();
  cert.white_regions = g.white_regions.size();
  cert.balanced = du.balanced();
  if (!*cert.balanced) bad.emplace_back("NotEulerian: oriented universe is not balanced");

  const StarPlacement stars = default_stars(*u);
  std::vector<KauffmanState> states;
  stage(bad, [&] {
    states = enumerate_states(*u, stars);
    cert.state_count = BigInt(states.size());
    cert.star_independent = true;
    for (const auto& s : adjacent_region_pairs(*u)) {
      ++cert.star_placements;
      if (enumerate_states(*u, s).size() != states.size()) {
        cert.star_independent = false;
        bad.push_back("star placement {" + std::to_string(s.first) + ", " + std::to_string(s.second) +
                      "} changes the state count");
      }
    }
  });

  if (knot && cert.state_count) {
    stage(bad, [&] {
      const CrossingLabels labels = label_universe(d);
      IntPolynomial sum;
      bool pos = false, neg = false;
      for (const auto& st : states) {
        const StateProduct term = inner_product(st, labels);
        sum += term.term();
        (term.at_minus_one() > 0 ? pos : neg) = true;
      }
      cert.alexander = sum;
      cert.alexander_at_minus_one = abs(sum.evaluate(-1));
      cert.state_signs_uniform = !(pos && neg);
      if (cert.alternating && !*cert.state_signs_uniform) {
        bad.emplace_back("SignMixture: state contributions at t = -1 differ in sign");
      }
    });
  }

  stage(bad, [&] {
    const ClockLattice lattice = clock_lattice(*u, stars);
    LatticeSummary sum{lattice.nodes.size(), lattice.moves.size(), lattice.clocked, lattice.counterclocked, true};
    for (const auto& m : lattice.moves) {
      const auto from = black_hole_count(d, lattice.nodes[m.from]);
      const auto to = black_hole_count(d, lattice.nodes[m.to]);
      if (from + 1 != to && to + 1 != from) {
        sum.black_hole_steps = false;
        bad.push_back("ClockTheoremViolation: move " + std::to_string(m.from) + " -> " + std::to_string(m.to) +
                      " changes the black hole count from " + std::to_string(from) + " to " + std::to_string(to));
      }
    }
    cert.lattice = sum;
  });

  const DirectedMultigraph dg = du.digraph();
  if (*cert.balanced) {
    stage(bad, [&] {
      const RootIndependenceReport roots = root_independence_check(dg);
      cert.arborescences = roots.per_root;
      if (!roots.passed) bad.emplace_back("arborescence counts depend on the root");
      cert.eulerian_tours = eulerian_tour_count(dg, 0);
      BigInt factor = 1;
      for (VertexId v = 0; v < dg.vertex_count; ++v) factor *= factorial(static_cast<unsigned>(dg.outdegree(v) - 1));
      cert.best_factor = factor;
      if (*cert.eulerian_tours != roots.per_root.front() * factor) {
        bad.emplace_back("NotEulerian: tour count breaks the BEST identity");
      }
    });
  }

  const BipartiteGraph bip = g.bipartite();
  stage(bad, [&] {
    const auto trees = spanning_tree_enumerate(bip, options.guard);
    cert.hypertrees_e = BigInt(hypertree_set(bip, ColorClass::E, trees).size());
    cert.hypertrees_v = BigInt(hypertree_set(bip, ColorClass::V, trees).size());
  });

  stage(bad, [&] {
    const RootPolytope p = root_polytope(bip);
    cert.polytope_dim = p.dim;
    if (p.dim + 2 != bip.vertex_count()) {
      bad.push_back("root polytope has dimension " + std::to_string(p.dim) + ", expected " +
                    std::to_string(bip.vertex_count() - 2));
    }
    for (VertexId root = 0; root < du.vertex_count; ++root) {
      const Triangulation tri = arborescence_triangulation(p, *u, g, du, root, options.guard);
      TriangulationSummary s;
      s.root = root;
      s.simplices = tri.simplices.size();
      if (root < options.face_checked_roots) {
        const TriangulationReport rep = verify_triangulation(tri, p, options.guard);
        s.unimodular = rep.unimodular;
        s.volume_sum = rep.volume_sum;
        s.proper_intersections = rep.proper_intersections;
        if (rep.polytope_volume) cert.normalized_volume = rep.polytope_volume;
        for (const auto& v : rep.violations) bad.push_back("triangulation at root " + std::to_string(root) + ": " + v);
      } else {
        s.unimodular = true;
        for (const auto& simplex : tri.simplices) {
          s.volume_sum += simplex.normalized_volume;
          s.unimodular = s.unimodular && simplex.normalized_volume == 1;
        }
        if (!s.unimodular) bad.push_back("triangulation at root " + std::to_string(root) + " is not unimodular");
        if (cert.normalized_volume && s.volume_sum != *cert.normalized_volume) {
          bad.push_back("triangulation at root " + std::to_string(root) + " has the wrong total volume");
        }
      }
      cert.triangulations.push_back(std::move(s));
    }
    if (!cert.normalized_volume) cert.normalized_volume = normalized_volume(p, options.guard);
  });

  stage(bad, [&] { cert.goeritz = goeritz_determinant(d, *u, *coloring); });

  if (!cert.alternating) bad.emplace_back("NotAlternating: determinant routes do not apply");

  // Equality chain. Determinant-valued routes join only for alternating input.
  std::vector<std::pair<std::string, BigInt>> values;
  auto add = [&](const std::string& name, const std::optional<BigInt>& v) {
    if (v) values.emplace_back(name, *v);
  };
  add("states", cert.state_count);
  for (std::size_t r = 0; r < cert.arborescences.size(); ++r) {
    values.emplace_back("arborescences[" + std::to_string(r) + "]", cert.arborescences[r]);
  }
  add("hypertrees_E", cert.hypertrees_e);
  add("hypertrees_V", cert.hypertrees_v);
  for (const auto& t : cert.triangulations) {
    values.emplace_back("triangulation[" + std::to_string(t.root) + "]", BigInt(t.simplices));
  }
  add("normalized_volume", cert.normalized_volume);
  if (cert.alternating) {
    add("alexander_at_minus_one", cert.alexander_at_minus_one);
    add("goeritz", cert.goeritz);
  }
  if (!values.empty()) {
    cert.common_value = values.front().second;
    for (const auto& [name, v] : values) {
      if (v != *cert.common_value) {
        bad.push_back("value mismatch: " + name + " = " + v.str() + " but " + values.front().first + " = " +
                      cert.common_value->str());
        cert.common_value.reset();
        break;
      }
    }
  }
  return cert;
}

Json Certificate::to_json() const {
  Json diagram{{"hash", diagram_hash},
               {"crossings", crossings},
               {"components", components},
               {"alternating", alternating},
               {"regions", optional_plain(regions)},
               {"black_regions", optional_plain(black_regions)},
               {"white_regions", optional_plain(white_regions)},
               {"balanced", optional_plain(balanced)}};

  Json roots = Json::array();
  for (const auto& x : arborescences) roots.push_back(kdet::to_json(x));
  Json simplex_counts = Json::array();
  for (const auto& t : triangulations) simplex_counts.push_back(t.simplices);
  Json routes{{"states", optional_json(state_count)},
              {"alexander_at_minus_one", optional_json(alexander_at_minus_one)},
              {"arborescences", roots},
              {"hypertrees_E", optional_json(hypertrees_e)},
              {"hypertrees_V", optional_json(hypertrees_v)},
              {"triangulation_simplices", simplex_counts},
              {"normalized_volume", optional_json(normalized_volume)},
              {"goeritz", optional_json(goeritz)}};

  Json lattice_json = nullptr;
  if (lattice) {
    lattice_json = {{"nodes", lattice->nodes},
                    {"moves", lattice->moves},
                    {"clocked", lattice->clocked},
                    {"counterclocked", lattice->counterclocked},
                    {"black_hole_steps", lattice->black_hole_steps}};
  }
  Json tri = Json::array();
  for (const auto& t : triangulations) {
    tri.push_back({{"root", t.root},
                   {"simplices", t.simplices},
                   {"unimodular", t.unimodular},
                   {"volume_sum", kdet::to_json(t.volume_sum)},
                   {"proper_intersections", optional_plain(t.proper_intersections)}});
  }
  Json checks{{"star_independent", optional_plain(star_independent)},
              {"star_placements", star_placements},
              {"state_signs_uniform", optional_plain(state_signs_uniform)},
              {"alexander", alexander ? kdet::to_json(*alexander) : Json(nullptr)},
              {"clock_lattice", lattice_json},
              {"eulerian_tours", optional_json(eulerian_tours)},
              {"best_factor", optional_json(best_factor)},
              {"polytope_dim", optional_plain(polytope_dim)},
              {"triangulations", tri}};

  return Json{{"diagram", diagram},
              {"routes", routes},
              {"checks", checks},
              {"common_value", optional_json(common_value)},
              {"verdict", passed() ? "pass" : "fail"},
              {"violations", violations}};
}

}  // namespace kdet
