#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "raag/complex.hpp"

namespace raag {

class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WallSet {
  std::vector<WallId> walls;  // sorted, each wall once
  Rational total_width{0};

  bool contains(const WallId& w) const;
};

/// Walls crossed by the reduced-word path from x to y.
WallSet separating_walls(const GroupElement& x, const GroupElement& y, const ActionSpec& spec);

/// d1 between vertices: the weighted length of x^-1 y.
Rational d1(const GroupElement& x, const GroupElement& y, const ActionSpec& spec);

struct EdgePath {
  GroupElement start;
  Word steps;

  std::vector<GroupElement> vertices() const;
  GroupElement end() const;
  /// Width sum over crossed walls, with multiplicity.
  Rational length(const ActionSpec& spec) const;
};

/// Explicit finite vertex set; kept sorted and duplicate free.
using VertexSet = std::vector<GroupElement>;
VertexSet make_vertex_set(std::vector<GroupElement> v);
bool set_contains(const VertexSet& s, const GroupElement& g);

/// Reason the local convexity test fails, or nothing when the set is convex.
/// A connected vertex set of a median graph is convex iff every pair at
/// distance two has all of its common neighbours in the set.
std::optional<std::string> convexity_violation(const VertexSet& s);
inline bool is_convex(const VertexSet& s) { return !convexity_violation(s).has_value(); }

/// Vertices on d1-geodesics from x to y.
VertexSet interval(const GroupElement& x, const GroupElement& y);

/// Smallest convex vertex set containing the given vertices.
VertexSet convex_hull(const std::vector<GroupElement>& points);

/// W meets the convex subcomplex spanned by s.
bool wall_meets(const WallId& w, const VertexSet& s);

struct SubcomplexDistance {
  Rational distance{0};
  WallSet walls;
};

/// d1 between convex vertex sets, summing the widths of the walls with all of
/// a on one side and all of b on the other.
SubcomplexDistance d1_subcomplexes(const VertexSet& a, const VertexSet& b, const ComplexBall& ball,
                                   const ActionSpec& spec);

struct MinimalityCertificate {
  enum class Reason { None, CrossedTwice, MeetsStart, MeetsEnd };
  bool minimal = true;
  Reason reason = Reason::None;
  std::optional<WallId> offending;
};

/// Minimal iff no wall is crossed twice and no crossed wall meets a or b.
MinimalityCertificate is_minimal_edge_path(const EdgePath& p, const VertexSet& a, const VertexSet& b,
                                           const ComplexBall& ball);

/// Uniform-cost search over the edges of the ball.
Rational bfs_d1_oracle(const ComplexBall& ball, const ActionSpec& spec, const GroupElement& x,
                       const GroupElement& y);
Rational bfs_d1_oracle(const ComplexBall& ball, const ActionSpec& spec, const VertexSet& a,
                       const VertexSet& b);

/// A d1-minimal edge path from a to b inside the ball, chosen uniformly among
/// predecessors on the shortest-path DAG.
EdgePath random_minimal_path(const ComplexBall& ball, const ActionSpec& spec, const VertexSet& a,
                             const VertexSet& b, std::mt19937_64& rng);

/// Distances from a vertex set to every vertex of the ball.
std::vector<Rational> ball_distances(const ComplexBall& ball, const ActionSpec& spec, const VertexSet& sources);

}  // namespace raag
