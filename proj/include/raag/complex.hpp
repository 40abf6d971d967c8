#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "raag/autos.hpp"
#include "raag/rational.hpp"
#include "raag/words.hpp"

namespace raag {

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Metrized, optionally twisted Salvetti action: every edge labelled v has
/// length widths[v]; g acts as the deck transformation of twist(g).
struct ActionSpec {
  GraphPtr graph;
  std::vector<Rational> widths;
  std::optional<Automorphism> twist;

  static ActionSpec untwisted(const GraphPtr& graph);
  static ActionSpec with_widths(const GraphPtr& graph, std::vector<Rational> widths);

  Rational width(VertexId v) const { return widths.at(v); }
  /// The deck transformation by which g acts.
  GroupElement acting(const GroupElement& g) const { return twist ? twist->apply(g) : g; }

  ActionSpec scaled(const Rational& factor) const;
  ActionSpec twisted(const Automorphism& phi) const;
  GroupElement element(std::string_view word) const { return parse_word(graph, word); }
  GroupElement identity() const { return GroupElement(graph); }
  GroupElement gen(VertexId v, bool inverse = false) const { return GroupElement::generator(graph, v, inverse); }
};

/// {"graph": "<path>", "widths": {"a": "3/2"}, "twist": {"images": {...}, "inverse_images": {...}}}
/// The graph path is resolved against base_dir. Missing widths default to 1,
/// missing twist images to the identity.
ActionSpec parse_action_spec(std::string_view json_text, const std::string& base_dir);
ActionSpec load_action_spec(const std::string& path);

/// Sum of widths over the letters of the canonical word (d1 from e to g).
Rational weighted_length(const GroupElement& g, const ActionSpec& spec);

/// Edge from base to base * gen.
struct Edge {
  GroupElement base;
  VertexId gen = 0;
  GroupElement head() const { return base * GroupElement::generator(base.graph_ptr(), gen); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Square with corners c, c u, c v, c u v for adjacent u < v.
struct Square {
  GroupElement corner;
  VertexId first = 0;
  VertexId second = 0;
};

/// Wall dual to the edges (g, gen) with g in coset_rep <lk(gen)>.
struct WallId {
  VertexId gen = 0;
  GroupElement coset_rep;
  friend bool operator==(const WallId&, const WallId&) = default;
  friend std::strong_ordering operator<=>(const WallId& a, const WallId& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.coset_rep <=> b.coset_rep;
  }
};

enum class Side { Minus, Plus };

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word-length ball of the universal cover of the Salvetti complex.
class ComplexBall {
 public:
  struct Arc {
    std::size_t to;
    std::size_t edge;
    Letter step;
  };

  int radius() const { return radius_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<GroupElement>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }
  const std::vector<WallId>& walls() const { return walls_; }
  const std::vector<Arc>& arcs(std::size_t vertex) const { return arcs_[vertex]; }

  bool contains(const GroupElement& g) const { return index_.count(g) != 0; }
  std::optional<std::size_t> index_of(const GroupElement& g) const;
  std::size_t require_index(const GroupElement& g) const;
  bool has_edge(const Edge& e) const;

 private:
  friend ComplexBall build_ball(const GraphPtr& graph, int radius, std::size_t budget);

  int radius_ = 0;
  GraphPtr graph_;
  std::vector<GroupElement> vertices_;
  std::unordered_map<GroupElement, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::vector<WallId> walls_;
  std::vector<std::vector<Arc>> arcs_;
};

ComplexBall build_ball(const GraphPtr& graph, int radius, std::size_t budget = 5'000'000);
inline ComplexBall build_ball(const ActionSpec& spec, int radius) { return build_ball(spec.graph, radius); }

/// Shortest element of g <S>: trailing S-letters deleted to fixpoint.
GroupElement coset_representative(const GroupElement& g, VertexMask s);
/// Shortest element of <S> g: leading S-letters deleted to fixpoint.
GroupElement left_coset_representative(const GroupElement& g, VertexMask s);

WallId wall_of_edge(const Edge& e);
WallId wall_of_edge(const ComplexBall& ball, const Edge& e);

/// Side of x relative to w: Minus holds the coset representative, Plus its
/// gen-neighbour.
Side wall_side(const WallId& w, const GroupElement& x);
Side wall_side(const ComplexBall& ball, const WallId& w, const GroupElement& x);

std::string format_wall(const WallId& w);

}  // namespace raag

template <>
struct std::hash<raag::WallId> {
  std::size_t operator()(const raag::WallId& w) const noexcept {
    return std::hash<raag::GroupElement>{}(w.coset_rep) * 31 + static_cast<std::size_t>(w.gen);
  }
};
