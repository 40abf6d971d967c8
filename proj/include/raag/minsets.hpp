#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/metric.hpp"

namespace raag {

class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MinsetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coset rep <gens> with rep the shortest element of the coset.
struct ParabolicCoset {
  GroupElement rep;
  VertexMask gens = 0;

  static ParabolicCoset make(const GroupElement& g, VertexMask gens);
  bool contains(const GroupElement& x) const;
};

/// Exact d1 between parabolic cosets, via the shortest element of the double
/// coset <S> g^-1 h <T>.
Rational coset_distance(const ParabolicCoset& a, const ParabolicCoset& b, const ActionSpec& spec);
Rational point_coset_distance(const GroupElement& x, const ParabolicCoset& c, const ActionSpec& spec);

/// Min(g) as a parabolic coset when the cyclic core of the acting element has
/// clique support; nothing otherwise.
std::optional<ParabolicCoset> minset_coset(const GroupElement& g, const ActionSpec& spec);

struct MinsetSlice {
  GroupElement element;
  VertexSet vertices;
  Rational l1_value{0};
};

/// Displacement d1(x, g.x) of a vertex under the action.
Rational displacement(const GroupElement& g, const GroupElement& x, const ActionSpec& spec);

/// Vertices of the ball with least displacement. Every member is checked with
/// axis_certificate.
MinsetSlice min1_in_ball(const GroupElement& g, const ComplexBall& ball, const ActionSpec& spec);

/// d1(x, g^N x) = N d1(x, g x).
bool axis_certificate(const GroupElement& g, const GroupElement& x, const ActionSpec& spec, int n = 2);

/// Coordinates on Min(v) when v acts as b s^+-1 b^-1: the tree coordinate is
/// b^-1 x with its s-letters deleted (an element of the free group <lk(s)>),
/// the line coordinate the exponent sum of s.
struct MinsetProduct {
  GroupElement base_vertex;  // b, shortest in b<st(s)>
  VertexId axis_gen = 0;     // s
  ParabolicCoset coset;

  GroupElement tree_coord(const GroupElement& x) const;
  int line_coord(const GroupElement& x) const;
  GroupElement point(const GroupElement& tree, int line) const;
  Rational line_position(int line, const ActionSpec& spec) const { return spec.width(axis_gen) * line; }
};

/// Product coordinates for Min(v); nothing when v does not act as a conjugate
/// of a generator.
std::optional<MinsetProduct> minset_product(VertexId v, const ActionSpec& spec);

struct BridgeSlice {
  VertexId v = 0;
  VertexId u = 0;
  Rational distance{0};  // d1(Min(v), Min(u))
  VertexSet vertices;    // P^u within the ball
  std::vector<GroupElement> tree_factor;
  std::vector<int> line_factor;
  bool product_ok = true;  // every in-ball point of tree_factor x line_factor is a vertex
};

/// Min(g) as an exact parabolic coset when available, together with its slice
/// in a ball.
struct MinsetView {
  std::optional<ParabolicCoset> coset;
  VertexSet slice;

  static MinsetView of(const GroupElement& g, const ComplexBall& ball, const ActionSpec& spec);
  /// Exact for a parabolic coset, otherwise the least distance to the slice.
  Rational distance_to(const GroupElement& x, const ActionSpec& spec) const;
};

/// Exact between parabolic cosets, otherwise the least distance between
/// slices (an upper bound).
Rational minset_distance(const MinsetView& a, const MinsetView& b, const ActionSpec& spec);

/// Minsets of the generators over one ball, computed on first use.
class GeneratorMinsets {
 public:
  GeneratorMinsets(const ComplexBall& ball, const ActionSpec& spec);

  const ComplexBall& ball() const { return *ball_; }
  const ActionSpec& spec() const { return *spec_; }
  const MinsetView& operator[](VertexId u) const;
  Rational distance(VertexId u, VertexId w) const { return minset_distance((*this)[u], (*this)[w], *spec_); }
  Rational distance_to(const GroupElement& x, VertexId u) const { return (*this)[u].distance_to(x, *spec_); }

 private:
  const ComplexBall* ball_;
  const ActionSpec* spec_;
  mutable std::vector<std::optional<MinsetView>> views_;
};

/// Vertices of Min(v) at distance d1(Min(v), Min(u)) from Min(u), in the ball.
BridgeSlice bridge_pu(VertexId v, VertexId u, const GeneratorMinsets& minsets);
BridgeSlice bridge_pu(VertexId v, VertexId u, const ComplexBall& ball, const ActionSpec& spec);

/// Finite tree on vertices 0..n-1.
struct Tree {
  std::vector<std::vector<int>> adjacent;

  int size() const { return static_cast<int>(adjacent.size()); }
  void add_edge(int a, int b);
  /// Vertices of the unique path from the set a to the set b, both ends
  /// included; a single vertex when they meet.
  std::vector<int> spanning_path(const std::vector<int>& a, const std::vector<int>& b) const;
  bool is_subtree(const std::vector<int>& s) const;
};

/// Some pair (i, j) of disjoint subtrees when the family has empty total
/// intersection. The pair found is the first k whose addition empties the
/// running intersection together with some earlier j.
std::optional<std::pair<std::size_t, std::size_t>> tree_disjoint_pair(const std::vector<std::vector<int>>& subtrees,
                                                                      const Tree& tree);

struct CoordinateChoice {
  std::optional<std::pair<VertexId, VertexId>> disjoint_pair;  // nothing: common intersection
};

struct Basepoint {
  VertexId v = 0;
  GroupElement vertex;
  GroupElement tree_coord;
  int line_coord = 0;
  CoordinateChoice tree_witness;
  CoordinateChoice line_witness;
  std::vector<BridgeSlice> bridges;
};

Basepoint choose_basepoint(VertexId v, const GeneratorMinsets& minsets);
Basepoint choose_basepoint(VertexId v, const ComplexBall& ball, const ActionSpec& spec);

/// The cyclic core of the acting element has a single generator in its support.
bool is_gridline(const GroupElement& g, const ActionSpec& spec);

/// u if u is not gridline, else u' if u' is not, else u u'.
GroupElement select_flat_representative(VertexId u, VertexId u2, const ActionSpec& spec);

}  // namespace raag
