// kdet: link determinants of alternating diagrams, computed along several
// independent routes, plus the objects behind them.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kdet/alexander.hpp"
#include "kdet/certificate.hpp"
#include "kdet/counting.hpp"
#include "kdet/polytope.hpp"
#include "kdet/serialize.hpp"
#include "kdet/states.hpp"
#include "kdet/tait.hpp"

namespace {

using namespace kdet;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kParse = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine:
    case ErrorCode::BadEdgeMultiplicity:
    case ErrorCode::Disconnected:
    case ErrorCode::EmptyDiagram:
    case ErrorCode::InconsistentOrientation:
    case ErrorCode::NonPlanarEmbedding:
      return kParse;
    case ErrorCode::TooLarge:
    case ErrorCode::NotAlternating:
      return kUsage;
    default:
      return kFail;
  }
}

struct Loaded {
  LinkDiagram diagram;
  Universe universe;
  FaceColoring coloring;
};

Loaded load(const std::string& path, bool black_outside) {
  LinkDiagram d = parse_pd(read_file(path));
  Universe u = build_universe(d);
  FaceColoring c = checkerboard(u, black_outside ? Color::black : Color::white);
  return {std::move(d), std::move(u), std::move(c)};
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_info(const std::string& path, bool black_outside, bool json) {
  const Loaded in = load(path, black_outside);
  const DirectedUniverse du = orient_universe(in.universe, in.coloring);
  Json out{{"crossings", in.diagram.n()},
           {"components", in.diagram.component_count()},
           {"regions", in.universe.region_count()},
           {"black_regions", in.coloring.count(Color::black)},
           {"white_regions", in.coloring.count(Color::white)},
           {"balanced", du.balanced()},
           {"alternating", check_alternating(in.diagram)}};
  if (json) {
    print_json(out);
  } else {
    for (const auto& [key, value] : out.items()) std::cout << key << ' ' << value.dump() << '\n';
  }
  return kPass;
}

int cmd_det(const std::string& path, const std::string& route, bool black_outside, bool json, bool force) {
  const Loaded in = load(path, black_outside);
  const bool alternating = check_alternating(in.diagram);
  if (!alternating && !force) {
    throw Error(ErrorCode::NotAlternating, "diagram is not alternating; pass --force for raw route counts");
  }
  const auto& d = in.diagram;
  const auto& u = in.universe;
  const auto wants = [&](const char* r) { return route == "all" || route == r; };
  const GuardLimits guard = GuardLimits::from_env();

  Json out = Json::object();
  if (wants("states")) {
    out["states"] = to_json(alternating ? determinant_via_states(d)
                                        : BigInt(enumerate_states(u, default_stars(u)).size()));
  }
  if (wants("alexander")) {
    if (d.component_count() != 1) {
      out["alexander"] = "skipped (MultiComponent)";
    } else {
      const IntPolynomial delta = state_sum(u, default_stars(u), label_universe(d));
      out["alexander"] = to_json(abs(delta.evaluate(-1)));
    }
  }
  const TaitGraph g = tait_graph(u, in.coloring);
  const BipartiteGraph bip = g.bipartite();
  if (wants("arborescence")) {
    out["arborescence"] = to_json(arborescence_count(orient_universe(u, in.coloring).digraph(), 0));
  }
  if (wants("hypertree")) {
    const auto trees = spanning_tree_enumerate(bip, guard);
    out["hypertree_E"] = hypertree_set(bip, ColorClass::E, trees).size();
    out["hypertree_V"] = hypertree_set(bip, ColorClass::V, trees).size();
  }
  if (wants("polytope")) out["polytope"] = to_json(normalized_volume(root_polytope(bip), guard));
  if (wants("goeritz")) out["goeritz"] = to_json(goeritz_determinant(d, u, in.coloring));
  if (out.empty()) throw CLI::ValidationError("--route", "unknown route " + route);

  bool agree = alternating;
  const Json* first = nullptr;
  for (const auto& [key, value] : out.items()) {
    if (value.is_string()) continue;
    if (first == nullptr) first = &value;
    agree = agree && value == *first;
  }
  if (!alternating) std::cerr << "warning: not alternating; values are route counts, not determinants\n";
  if (json) {
    out["alternating"] = alternating;
    print_json(out);
  } else {
    for (const auto& [key, value] : out.items()) {
      std::cout << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return agree ? kPass : kFail;
}

int cmd_verify(const std::string& path, bool black_outside) {
  const LinkDiagram d = parse_pd(read_file(path));
  CertificateOptions options;
  options.outer_color = black_outside ? Color::black : Color::white;
  options.guard = GuardLimits::from_env();
  const Certificate cert = certify(d, options);
  print_json(cert.to_json());
  return cert.passed() ? kPass : kFail;
}

void require_within_guard(const Universe& u) {
  const GuardLimits guard = GuardLimits::from_env();
  if (u.vertex_count() > guard.max_vertices) {
    throw Error(ErrorCode::TooLarge, std::to_string(u.vertex_count()) + " crossings exceed the enumeration guard of " +
                                         std::to_string(guard.max_vertices));
  }
}

int cmd_states(const std::string& path, bool black_outside) {
  const Loaded in = load(path, black_outside);
  require_within_guard(in.universe);
  const auto states = enumerate_states(in.universe, default_stars(in.universe));
  print_json(to_json(in.universe, std::span<const KauffmanState>(states)));
  return kPass;
}

int cmd_lattice(const std::string& path, bool black_outside) {
  const Loaded in = load(path, black_outside);
  require_within_guard(in.universe);
  print_json(to_json(in.universe, clock_lattice(in.universe, default_stars(in.universe))));
  return kPass;
}

int cmd_polytope(const std::string& path, bool graph_input, bool black_outside, std::size_t root) {
  const GuardLimits guard = GuardLimits::from_env();
  Json simplices = Json::array();
  RootPolytope p;
  if (graph_input) {
    const BipartiteGraph g = parse_bipartite_edges(read_file(path));
    if (!g.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
    p = root_polytope(g);
    for (const auto& s : pulling_triangulation(p, guard)) {
      Json vertices = Json::array();
      for (auto i : s) vertices.push_back(to_json(p.vertices[i]));
      simplices.push_back({{"edges", s}, {"vertices", vertices}, {"normalized_volume", 1}});
    }
  } else {
    const Loaded in = load(path, black_outside);
    const TaitGraph g = tait_graph(in.universe, in.coloring);
    const DirectedUniverse du = orient_universe(in.universe, in.coloring);
    if (root >= du.vertex_count) throw CLI::ValidationError("--root", "no such crossing");
    p = root_polytope(g.bipartite());
    for (const auto& s : arborescence_triangulation(p, in.universe, g, du, root, guard).simplices) {
      simplices.push_back(to_json(s));
    }
  }
  Json vertices = Json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  Json out{{"e_count", p.graph.e_count},
           {"v_count", p.graph.v_count},
           {"dim", p.dim},
           {"vertices", vertices},
           {"simplices", simplices},
           {"normalized_volume", to_json(normalized_volume(p, guard))}};
  print_json(out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link determinants along the state, Alexander, arborescence, hypertree, polytope and Goeritz routes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool black_outside = false;
  app.add_flag("--black-outside", black_outside, "colour the outer region black (use the other Tait graph)");

  std::string file;
  bool json = false;
  bool force = false;
  bool graph_input = false;
  std::string route = "all";
  std::size_t root = 0;

  auto* info = app.add_subcommand("info", "crossings, regions, colour classes, balance");
  info->add_option("file", file, "PD file")->required();
  info->add_flag("--json", json);

  auto* det = app.add_subcommand("det", "determinant along one or all routes");
  det->add_option("file", file, "PD file")->required();
  det->add_option("--route", route)
      ->check(CLI::IsMember({"all", "states", "alexander", "arborescence", "hypertree", "polytope", "goeritz"}));
  det->add_flag("--json", json);
  det->add_flag("--force", force, "accept non-alternating diagrams");

  auto* verify = app.add_subcommand("verify", "full equality-chain certificate as JSON");
  verify->add_option("file", file, "PD file")->required();

  auto* states = app.add_subcommand("states", "Kauffman states as JSON");
  states->add_option("file", file, "PD file")->required();

  auto* lattice = app.add_subcommand("lattice", "clock lattice as JSON");
  lattice->add_option("file", file, "PD file")->required();

  auto* polytope = app.add_subcommand("polytope", "root polytope and its triangulation as JSON");
  polytope->add_option("file", file, "PD file, or edge list with --graph")->required();
  polytope->add_flag("--graph", graph_input, "input is a bipartite edge list (lines \"e<i> v<j>\")");
  polytope->add_option("--root", root, "arborescence root crossing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(file, black_outside, json);
    if (*det) return cmd_det(file, route, black_outside, json, force);
    if (*verify) return cmd_verify(file, black_outside);
    if (*states) return cmd_states(file, black_outside);
    if (*lattice) return cmd_lattice(file, black_outside);
    if (*polytope) return cmd_polytope(file, graph_input, black_outside, root);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}
