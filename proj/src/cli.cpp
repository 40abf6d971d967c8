#include "raag/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "raag/spectra.hpp"

namespace raag {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string graph_path;
  std::string action_path;
  int radius = 4;
  int classes_up_to = 5;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  int geometry_radius = 4;
  int d_radius = 4;

  std::string x, y, element, v, u, other_action;
};

ActionSpec load_spec(const Config& c) {
  if (!c.action_path.empty()) return load_action_spec(c.action_path);
  if (c.graph_path.empty()) throw InputError("need --graph or --action");
  auto graph = std::make_shared<const DefiningGraph>(load_graph(c.graph_path));
  return ActionSpec::untwisted(graph);
}

VertexId generator(const ActionSpec& spec, const std::string& name) {
  auto v = spec.graph->find(name);
  if (!v) throw InputError("unknown generator '" + name + "'");
  return *v;
}

Json word_list(const std::vector<GroupElement>& v) {
  Json out = Json::array();
  for (const auto& g : v) out.push_back(format_word(g));
  return out;
}

Json rational_json(const Rational& r) { return format_rational(r); }

Json check_json(const CheckInstance& c) {
  return {{"instance", c.label},
          {"lhs", rational_json(c.lhs)},
          {"rhs", rational_json(c.rhs)},
          {"margin", rational_json(c.margin)}};
}

Json bridge_json(const BridgeSlice& b, const DefiningGraph& g) {
  Json lines = Json::array();
  for (int k : b.line_factor) lines.push_back(k);
  return {{"v", g.name(b.v)},
          {"u", g.name(b.u)},
          {"distance", rational_json(b.distance)},
          {"vertices", word_list(b.vertices)},
          {"tree_factor", word_list(b.tree_factor)},
          {"line_factor", lines},
          {"product_ok", b.product_ok}};
}

Json choice_json(const CoordinateChoice& c, const DefiningGraph& g) {
  if (!c.disjoint_pair) return "common-intersection";
  return Json::array({g.name(c.disjoint_pair->first), g.name(c.disjoint_pair->second)});
}

Json basepoint_json(const Basepoint& b, const DefiningGraph& g) {
  Json bridges = Json::array();
  for (const auto& br : b.bridges) bridges.push_back(bridge_json(br, g));
  return {{"v", g.name(b.v)},
          {"vertex", format_word(b.vertex)},
          {"tree_coord", format_word(b.tree_coord)},
          {"line_coord", b.line_coord},
          {"tree_witness", choice_json(b.tree_witness, g)},
          {"line_witness", choice_json(b.line_witness, g)},
          {"bridges", bridges}};
}

Json report_json(const BoundReport& r, const DefiningGraph& g) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json instances = Json::array();
    for (const auto& i : c.instances) instances.push_back(check_json(i));
    checks.push_back({{"name", c.name},
                      {"domain", c.domain},
                      {"count", c.count},
                      {"pass", c.pass},
                      {"worst", c.worst ? check_json(*c.worst) : Json()},
                      {"instances", instances}});
  }
  Json basepoints = Json::array();
  for (const auto& b : r.basepoints) basepoints.push_back(basepoint_json(b, g));
  return {{"radius", r.radius},
          {"geometry_radius", r.geometry_radius},
          {"m1", rational_json(r.m1.value)},
          {"m1_witness", format_word(r.m1.witness)},
          {"d_radius", r.m1.radius},
          {"basepoints", basepoints},
          {"length_bound_worst_ratio", rational_json(r.keya_worst_ratio)},
          {"length_bound_worst_element", r.keya_worst_element ? format_word(*r.keya_worst_element) : ""},
          {"checks", checks},
          {"pass", r.pass()}};
}

int run_command(const std::string& command, const Config& c, std::ostream& out) {
  if (command == "validate") {
    DefiningGraph graph = !c.action_path.empty() ? *load_action_spec(c.action_path).graph : load_graph(c.graph_path);
    auto dim = homogeneity_dimension(graph);
    if (dim != 2) throw InputError("graph is not homogeneous of dimension 2");
    out << Json{{"vertices", graph.vertex_count()},
                {"edges", graph.edges().size()},
                {"homogeneity_dimension", *dim}}
               .dump(2)
        << "\n";
    return 0;
  }

  const ActionSpec spec = load_spec(c);
  const DefiningGraph& graph = *spec.graph;

  if (command == "ball") {
    ComplexBall ball = build_ball(spec, c.radius);
    out << Json{{"radius", c.radius},
                {"vertices", ball.vertices().size()},
                {"edges", ball.edges().size()},
                {"squares", ball.squares().size()},
                {"walls", ball.walls().size()}}
               .dump(2)
        << "\n";
    return 0;
  }
  if (command == "d1") {
    GroupElement x = spec.element(c.x), y = spec.element(c.y);
    WallSet walls = separating_walls(x, y, spec);
    if (c.format == "json") {
      Json ws = Json::array();
      for (const auto& w : walls.walls) ws.push_back(format_wall(w));
      out << Json{{"x", format_word(x)}, {"y", format_word(y)}, {"d1", rational_json(walls.total_width)}, {"walls", ws}}
                 .dump(2)
          << "\n";
    } else {
      out << format_rational(walls.total_width) << "\n";
    }
    return 0;
  }
  if (command == "l1") {
    GroupElement g = spec.element(c.element);
    L1Length l = l1_length(g, spec);
    out << Json{{"element", format_word(g)},
                {"acting", format_word(spec.acting(g))},
                {"l1", rational_json(l.value)},
                {"method", method_name(l.method)},
                {"certificate", l.certificate},
                {"cyclic_length", cyclic_length(g)},
                {"cat0_interval", {{"upper", rational_json(l.value)},
                                   {"lower_squared", rational_json(l.value * l.value / 2)}}}}
               .dump(2)
        << "\n";
    return 0;
  }
  if (command == "minset") {
    GroupElement g = spec.element(c.element);
    ComplexBall ball = build_ball(spec, c.radius);
    MinsetSlice m = min1_in_ball(g, ball, spec);
    Json j{{"element", format_word(g)},
           {"radius", c.radius},
           {"l1", rational_json(m.l1_value)},
           {"vertices", word_list(m.vertices)}};
    if (auto coset = minset_coset(g, spec))
      j["coset"] = {{"rep", format_word(coset->rep)}, {"generators", graph.format_set(coset->gens)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  if (command == "bridge") {
    ComplexBall ball = build_ball(spec, c.radius);
    out << bridge_json(bridge_pu(generator(spec, c.v), generator(spec, c.u), ball, spec), graph).dump(2) << "\n";
    return 0;
  }
  if (command == "basepoint") {
    ComplexBall ball = build_ball(spec, c.radius);
    out << basepoint_json(choose_basepoint(generator(spec, c.v), ball, spec), graph).dump(2) << "\n";
    return 0;
  }
  if (command == "spectrum") {
    LengthSpectrum s = length_spectrum(spec, classes_up_to(spec.graph, c.classes_up_to), c.d_radius);
    if (c.format == "json") {
      Json entries = Json::array();
      for (std::size_t i = 0; i < s.entries.size(); ++i)
        entries.push_back({{"class", i},
                           {"word", format_word(graph, s.entries[i].first.word)},
                           {"l1", rational_json(s.entries[i].second)},
                           {"scaled", rational_json(s.scaled(i))}});
      out << Json{{"classes_up_to", c.classes_up_to},
                  {"d_radius", c.d_radius},
                  {"m1", rational_json(s.m1.value)},
                  {"m1_witness", format_word(s.m1.witness)},
                  {"scale", rational_json(s.scale)},
                  {"entries", entries}}
                 .dump(2)
          << "\n";
    } else {
      out << "class,word,l1_num,l1_den,scaled_num,scaled_den\n";
      for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const Rational l = s.entries[i].second, sc = s.scaled(i);
        out << i << "," << format_word(graph, s.entries[i].first.word) << "," << l.numerator() << ","
            << l.denominator() << "," << sc.numerator() << "," << sc.denominator() << "\n";
      }
    }
    return 0;
  }
  if (command == "verify") {
    VerifyOptions options;
    options.geometry_radius = c.geometry_radius;
    options.d_radius = c.d_radius;
    BoundReport r = verify_bounds(spec, c.radius, options);
    out << report_json(r, graph).dump(2) << "\n";
    return r.pass() ? 0 : 1;
  }
  if (command == "compare") {
    ActionSpec other = load_action_spec(c.other_action);
    Comparison cmp = compare_actions(spec, other, classes_up_to(spec.graph, c.classes_up_to));
    out << Json{{"classes_up_to", c.classes_up_to},
                {"verdict", cmp.projectively_equal ? "projectively-equal" : "distinct"},
                {"ratio", rational_json(cmp.ratio)},
                {"witness", cmp.witness ? Json(format_word(graph, cmp.witness->word)) : Json()}}
               .dump(2)
        << "\n";
    return cmp.projectively_equal ? 0 : 1;
  }
  throw InputError("unknown subcommand '" + command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Word geometry, d1 metric and length spectra of 2-dimensional RAAG actions", "raag"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--graph", c.graph_path, "defining graph file");
  app.add_option("--action", c.action_path, "action spec JSON");
  app.add_option("--radius", c.radius, "ball radius")->check(CLI::PositiveNumber);
  app.add_option("--classes-up-to", c.classes_up_to, "longest element used to enumerate classes")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", c.seed, "seed for randomized suites");
  app.add_option("--out", c.out_path, "write output to this file");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--geometry-radius", c.geometry_radius, "ball radius for bridges and basepoint")
      ->check(CLI::PositiveNumber);
  app.add_option("--d-radius", c.d_radius, "radius of the set D defining M1")->check(CLI::PositiveNumber);

  app.add_subcommand("validate", "check the graph is homogeneous of dimension 2");
  app.add_subcommand("ball", "ball statistics");
  auto* d1c = app.add_subcommand("d1", "d1 distance between two vertices");
  d1c->add_option("x", c.x)->required();
  d1c->add_option("y", c.y)->required();
  app.add_subcommand("l1", "l1 translation length")->add_option("g", c.element)->required();
  app.add_subcommand("minset", "minset slice of an element")->add_option("g", c.element)->required();
  auto* bridge = app.add_subcommand("bridge", "bridge P^u inside Min(v)");
  bridge->add_option("v", c.v)->required();
  bridge->add_option("u", c.u)->required();
  app.add_subcommand("basepoint", "basepoint in Min(v)")->add_option("v", c.v)->required();
  app.add_subcommand("spectrum", "length spectrum over conjugacy classes");
  app.add_subcommand("verify", "verify the length bounds");
  app.add_subcommand("compare", "compare projectivized spectra")->add_option("spec2", c.other_action)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (c.out_path.empty()) return run_command(command, c, out);
    std::ostringstream buffer;
    int code = run_command(command, c, buffer);
    std::ofstream file(c.out_path);
    if (!file) throw InputError("cannot write '" + c.out_path + "'");
    file << buffer.str();
    return code;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << "\n";
    return 2;
  }
}

}  // namespace raag
