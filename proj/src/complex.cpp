#include "raag/complex.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace raag {

ActionSpec ActionSpec::untwisted(const GraphPtr& graph) {
  return with_widths(graph, std::vector<Rational>(graph->vertex_count(), Rational(1)));
}

ActionSpec ActionSpec::with_widths(const GraphPtr& graph, std::vector<Rational> widths) {
  if (static_cast<int>(widths.size()) != graph->vertex_count())
    throw ActionError("need one width per generator");
  for (VertexId v = 0; v < graph->vertex_count(); ++v)
    if (widths[v] <= 0) throw ActionError("width of " + graph->name(v) + " must be positive");
  return ActionSpec{graph, std::move(widths), std::nullopt};
}

ActionSpec ActionSpec::scaled(const Rational& factor) const {
  if (factor <= 0) throw ActionError("scale factor must be positive");
  ActionSpec out = *this;
  for (auto& w : out.widths) w *= factor;
  return out;
}

ActionSpec ActionSpec::twisted(const Automorphism& phi) const {
  if (phi.graph_ptr() != graph) throw ActionError("twist over a different graph");
  ActionSpec out = *this;
  out.twist = twist ? twist->compose(phi) : phi;
  return out;
}

ActionSpec parse_action_spec(std::string_view json_text, const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ActionError(std::string("action spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("graph") || !j["graph"].is_string())
    throw ActionError("action spec needs a \"graph\" path");
  std::filesystem::path gp = j["graph"].get<std::string>();
  if (gp.is_relative() && !base_dir.empty()) gp = std::filesystem::path(base_dir) / gp;
  auto graph = std::make_shared<const DefiningGraph>(load_graph(gp.string()));

  std::vector<Rational> widths(graph->vertex_count(), Rational(1));
  if (j.contains("widths")) {
    for (auto& [name, value] : j["widths"].items()) {
      auto v = graph->find(name);
      if (!v) throw ActionError("width given for unknown generator '" + name + "'");
      try {
        widths[*v] = value.is_string() ? parse_rational(value.get<std::string>())
                                       : Rational(value.get<std::int64_t>());
      } catch (const std::exception& e) {
        throw ActionError("width of '" + name + "': " + e.what());
      }
    }
  }
  ActionSpec spec = ActionSpec::with_widths(graph, std::move(widths));

  if (j.contains("twist") && !j["twist"].is_null()) {
    const auto& t = j["twist"];
    std::vector<GroupElement> images, inverse;
    for (VertexId v = 0; v < graph->vertex_count(); ++v) {
      images.push_back(GroupElement::generator(graph, v));
      inverse.push_back(GroupElement::generator(graph, v));
    }
    auto read = [&](const char* key, std::vector<GroupElement>& into) {
      if (!t.contains(key)) return;
      for (auto& [name, value] : t[key].items()) {
        auto v = graph->find(name);
        if (!v) throw ActionError(std::string("twist ") + key + " names unknown generator '" + name + "'");
        into[*v] = parse_word(graph, value.get<std::string>());
      }
    };
    read("images", images);
    read("inverse_images", inverse);
    spec.twist = Automorphism::make(graph, std::move(images), std::move(inverse));
  }
  return spec;
}

ActionSpec load_action_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ActionError("cannot open action spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_action_spec(ss.str(), std::filesystem::path(path).parent_path().string());
}

Rational weighted_length(const GroupElement& g, const ActionSpec& spec) {
  Rational total(0);
  for (auto l : g.word()) total += spec.widths[l.gen];
  return total;
}

std::optional<std::size_t> ComplexBall::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ComplexBall::require_index(const GroupElement& g) const {
  if (auto i = index_of(g)) return *i;
  throw ComplexError("vertex '" + format_word(g) + "' lies outside the ball of radius " + std::to_string(radius_));
}

bool ComplexBall::has_edge(const Edge& e) const { return contains(e.base) && contains(e.head()); }

ComplexBall build_ball(const GraphPtr& graph, int radius, std::size_t budget) {
  if (radius < 1) throw ComplexError("ball radius must be at least 1");
  if (homogeneity_dimension(*graph) != 2)
    throw ComplexError("defining graph is not homogeneous of dimension 2");
  ComplexBall ball;
  ball.radius_ = radius;
  ball.graph_ = graph;
  ball.vertices_ = enumerate_ball(graph, radius, budget);
  ball.index_.reserve(ball.vertices_.size());
  for (std::size_t i = 0; i < ball.vertices_.size(); ++i) ball.index_.emplace(ball.vertices_[i], i);
  ball.arcs_.resize(ball.vertices_.size());

  const int n = graph->vertex_count();
  std::vector<GroupElement> gens;
  for (VertexId v = 0; v < n; ++v) gens.push_back(GroupElement::generator(graph, v));

  std::set<WallId> walls;
  for (std::size_t i = 0; i < ball.vertices_.size(); ++i) {
    const GroupElement& x = ball.vertices_[i];
    for (VertexId v = 0; v < n; ++v) {
      auto j = ball.index_of(x * gens[v]);
      if (!j) continue;
      std::size_t e = ball.edges_.size();
      ball.edges_.push_back({x, v});
      ball.arcs_[i].push_back({*j, e, Letter{v, false}});
      ball.arcs_[*j].push_back({i, e, Letter{v, true}});
      walls.insert(wall_of_edge(ball.edges_.back()));
    }
    for (auto [u, v] : graph->edges()) {
      GroupElement xu = x * gens[u], xv = x * gens[v];
      if (ball.contains(xu) && ball.contains(xv) && ball.contains(xu * gens[v]))
        ball.squares_.push_back({x, u, v});
    }
  }
  ball.walls_.assign(walls.begin(), walls.end());
  return ball;
}

GroupElement coset_representative(const GroupElement& g, VertexMask s) {
  Word w = g.word();
  for (;;) {
    auto ends = end_movable(g.graph(), w);
    auto it = std::find_if(ends.rbegin(), ends.rend(), [&](std::size_t i) { return has(s, w[i].gen); });
    if (it == ends.rend()) break;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  return normal_form(w, g.graph_ptr());
}

GroupElement left_coset_representative(const GroupElement& g, VertexMask s) {
  Word w = g.word();
  for (;;) {
    auto fronts = front_movable(g.graph(), w);
    auto it = std::find_if(fronts.begin(), fronts.end(), [&](std::size_t i) { return has(s, w[i].gen); });
    if (it == fronts.end()) break;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  return normal_form(w, g.graph_ptr());
}

WallId wall_of_edge(const Edge& e) {
  return {e.gen, coset_representative(e.base, e.base.graph().neighbors(e.gen))};
}

WallId wall_of_edge(const ComplexBall& ball, const Edge& e) {
  if (!ball.has_edge(e))
    throw ComplexError("edge (" + format_word(e.base) + ", " + ball.graph_ptr()->name(e.gen) +
                       ") is not in the ball");
  return wall_of_edge(e);
}

Side wall_side(const WallId& w, const GroupElement& x) {
  // Walk the reduced path from the coset representative to x and count the
  // crossings of w: a positive gen-letter whose preceding letters all lie in
  // lk(gen) crosses w.
  const GroupElement rel = invert(w.coset_rep) * x;
  const VertexMask link = x.graph().neighbors(w.gen);
  VertexMask seen = 0;
  int crossings = 0;
  for (auto l : rel.word()) {
    if (l.gen == w.gen && !l.inverse && (seen & ~link) == 0) ++crossings;
    seen |= bit(l.gen);
  }
  return crossings % 2 ? Side::Plus : Side::Minus;
}

Side wall_side(const ComplexBall& ball, const WallId& w, const GroupElement& x) {
  if (!ball.contains(x)) throw ComplexError("vertex '" + format_word(x) + "' lies outside the ball");
  if (!std::binary_search(ball.walls().begin(), ball.walls().end(), w))
    throw ComplexError("unknown wall " + format_wall(w));
  return wall_side(w, x);
}

std::string format_wall(const WallId& w) {
  return "W(" + w.coset_rep.graph().name(w.gen) + "; " + format_word(w.coset_rep) + ")";
}

}  // namespace raag
