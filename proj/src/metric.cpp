#include "raag/metric.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <unordered_set>

namespace raag {

bool WallSet::contains(const WallId& w) const { return std::binary_search(walls.begin(), walls.end(), w); }

WallSet separating_walls(const GroupElement& x, const GroupElement& y, const ActionSpec& spec) {
  if (x.graph_ptr() != y.graph_ptr() || x.graph_ptr() != spec.graph)
    throw MetricError("separating_walls: graph mismatch");
  const GroupElement rel = invert(x) * y;
  WallSet out;
  GroupElement here = x;
  for (auto l : rel.word()) {
    GroupElement next = here * GroupElement::generator(spec.graph, l.gen, l.inverse);
    const GroupElement& base = l.inverse ? next : here;
    out.walls.push_back(wall_of_edge(Edge{base, l.gen}));
    out.total_width += spec.width(l.gen);
    here = std::move(next);
  }
  std::sort(out.walls.begin(), out.walls.end());
  if (std::adjacent_find(out.walls.begin(), out.walls.end()) != out.walls.end())
    throw MetricError("reduced path crossed a wall twice");
  return out;
}

Rational d1(const GroupElement& x, const GroupElement& y, const ActionSpec& spec) {
  return weighted_length(invert(x) * y, spec);
}

std::vector<GroupElement> EdgePath::vertices() const {
  std::vector<GroupElement> out{start};
  for (auto l : steps) out.push_back(out.back() * GroupElement::generator(start.graph_ptr(), l.gen, l.inverse));
  return out;
}

GroupElement EdgePath::end() const { return vertices().back(); }

Rational EdgePath::length(const ActionSpec& spec) const {
  Rational total(0);
  for (auto l : steps) total += spec.width(l.gen);
  return total;
}

VertexSet make_vertex_set(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(const VertexSet& s, const GroupElement& g) { return std::binary_search(s.begin(), s.end(), g); }

namespace {

std::vector<GroupElement> letter_elements(const GraphPtr& graph) {
  std::vector<GroupElement> out;
  for (VertexId v = 0; v < graph->vertex_count(); ++v) {
    out.push_back(GroupElement::generator(graph, v));
    out.push_back(GroupElement::generator(graph, v, true));
  }
  return out;
}

}  // namespace

std::optional<std::string> convexity_violation(const VertexSet& s) {
  if (s.empty()) return "empty vertex set";
  const GraphPtr& graph = s.front().graph_ptr();
  const auto letters = letter_elements(graph);

  std::set<GroupElement> reached{s.front()};
  std::deque<GroupElement> queue{s.front()};
  while (!queue.empty()) {
    GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& l : letters) {
      GroupElement y = x * l;
      if (set_contains(s, y) && reached.insert(y).second) queue.push_back(y);
    }
  }
  if (reached.size() != s.size()) return "vertex set is not connected";

  for (const auto& a : s) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      GroupElement mid = a * letters[i];
      for (std::size_t j = 0; j < letters.size(); ++j) {
        GroupElement b = mid * letters[j];
        if (b.length() == a.length() && b == a) continue;
        if (!set_contains(s, b) || (invert(a) * b).length() != 2) continue;
        if (!set_contains(s, mid))
          return "common neighbour " + format_word(mid) + " of " + format_word(a) + " and " + format_word(b) +
                 " is missing";
      }
    }
  }
  return std::nullopt;
}

VertexSet interval(const GroupElement& x, const GroupElement& y) {
  const auto letters = letter_elements(x.graph_ptr());
  std::set<GroupElement> out{x};
  std::deque<GroupElement> queue{x};
  while (!queue.empty()) {
    GroupElement z = queue.front();
    queue.pop_front();
    const std::size_t remaining = (invert(z) * y).length();
    for (const auto& l : letters) {
      GroupElement n = z * l;
      if ((invert(n) * y).length() + 1 == remaining && out.insert(n).second) queue.push_back(n);
    }
  }
  return VertexSet(out.begin(), out.end());
}

VertexSet convex_hull(const std::vector<GroupElement>& points) {
  VertexSet hull = make_vertex_set(points);
  for (;;) {
    std::set<GroupElement> grown(hull.begin(), hull.end());
    for (std::size_t i = 0; i < hull.size(); ++i)
      for (std::size_t j = i + 1; j < hull.size(); ++j)
        for (auto& z : interval(hull[i], hull[j])) grown.insert(z);
    if (grown.size() == hull.size()) return hull;
    hull.assign(grown.begin(), grown.end());
  }
}

bool wall_meets(const WallId& w, const VertexSet& s) {
  bool minus = false, plus = false;
  for (const auto& x : s) {
    (wall_side(w, x) == Side::Plus ? plus : minus) = true;
    if (minus && plus) return true;
  }
  return false;
}

namespace {

void check_subcomplex(const VertexSet& s, const ComplexBall& ball, const char* which) {
  if (s.empty()) throw MetricError(std::string(which) + " is empty");
  for (const auto& x : s)
    if (!ball.contains(x)) throw MetricError(std::string(which) + " leaves the ball at " + format_word(x));
  if (auto why = convexity_violation(s)) throw MetricError(std::string(which) + " is not convex: " + *why);
}

std::optional<Side> common_side(const WallId& w, const VertexSet& s) {
  Side first = wall_side(w, s.front());
  for (const auto& x : s)
    if (wall_side(w, x) != first) return std::nullopt;
  return first;
}

}  // namespace

SubcomplexDistance d1_subcomplexes(const VertexSet& a, const VertexSet& b, const ComplexBall& ball,
                                   const ActionSpec& spec) {
  check_subcomplex(a, ball, "first subcomplex");
  check_subcomplex(b, ball, "second subcomplex");
  SubcomplexDistance out;
  for (const auto& x : a)
    if (set_contains(b, x)) return out;
  for (const auto& w : separating_walls(a.front(), b.front(), spec).walls) {
    auto sa = common_side(w, a);
    auto sb = common_side(w, b);
    if (sa && sb && *sa != *sb) {
      out.walls.walls.push_back(w);
      out.walls.total_width += spec.width(w.gen);
    }
  }
  out.distance = out.walls.total_width;
  return out;
}

MinimalityCertificate is_minimal_edge_path(const EdgePath& p, const VertexSet& a, const VertexSet& b,
                                           const ComplexBall& ball) {
  const auto verts = p.vertices();
  for (const auto& v : verts)
    if (!ball.contains(v)) throw MetricError("edge path leaves the ball at " + format_word(v));
  if (!set_contains(a, verts.front())) throw MetricError("edge path does not start in the first subcomplex");
  if (!set_contains(b, verts.back())) throw MetricError("edge path does not end in the second subcomplex");

  MinimalityCertificate cert;
  std::vector<WallId> crossed;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Letter l = p.steps[i];
    const GroupElement& base = l.inverse ? verts[i + 1] : verts[i];
    WallId w = wall_of_edge(Edge{base, l.gen});
    if (std::find(crossed.begin(), crossed.end(), w) != crossed.end()) {
      cert = {false, MinimalityCertificate::Reason::CrossedTwice, w};
      return cert;
    }
    crossed.push_back(w);
  }
  for (const auto& w : crossed) {
    if (wall_meets(w, a)) return {false, MinimalityCertificate::Reason::MeetsStart, w};
    if (wall_meets(w, b)) return {false, MinimalityCertificate::Reason::MeetsEnd, w};
  }
  return cert;
}

std::vector<Rational> ball_distances(const ComplexBall& ball, const ActionSpec& spec, const VertexSet& sources) {
  const std::size_t n = ball.vertices().size();
  std::vector<Rational> dist(n, Rational(-1));
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (const auto& s : sources) {
    std::size_t i = ball.require_index(s);
    dist[i] = 0;
    pq.push({Rational(0), i});
  }
  while (!pq.empty()) {
    auto [d, i] = pq.top();
    pq.pop();
    if (d != dist[i]) continue;
    for (const auto& arc : ball.arcs(i)) {
      Rational nd = d + spec.width(arc.step.gen);
      if (dist[arc.to] < 0 || nd < dist[arc.to]) {
        dist[arc.to] = nd;
        pq.push({nd, arc.to});
      }
    }
  }
  return dist;
}

Rational bfs_d1_oracle(const ComplexBall& ball, const ActionSpec& spec, const GroupElement& x,
                       const GroupElement& y) {
  return bfs_d1_oracle(ball, spec, VertexSet{x}, VertexSet{y});
}

Rational bfs_d1_oracle(const ComplexBall& ball, const ActionSpec& spec, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw MetricError("empty vertex set");
  for (const auto& x : a)
    for (const auto& y : b)
      if (static_cast<int>(x.length() + (invert(x) * y).length()) > ball.radius())
        throw MetricError("validity window violated: |" + format_word(x) + "| + d(" + format_word(x) + ", " +
                          format_word(y) + ") exceeds ball radius " + std::to_string(ball.radius()));
  auto dist = ball_distances(ball, spec, a);
  Rational best(-1);
  for (const auto& y : b) {
    Rational d = dist[ball.require_index(y)];
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  if (best < 0) throw MetricError("sets are disconnected inside the ball");
  return best;
}

EdgePath random_minimal_path(const ComplexBall& ball, const ActionSpec& spec, const VertexSet& a,
                             const VertexSet& b, std::mt19937_64& rng) {
  auto dist = ball_distances(ball, spec, a);
  Rational best(-1);
  std::vector<std::size_t> targets;
  for (const auto& y : b) {
    std::size_t i = ball.require_index(y);
    if (dist[i] < 0) continue;
    if (best < 0 || dist[i] < best) {
      best = dist[i];
      targets.clear();
    }
    if (dist[i] == best) targets.push_back(i);
  }
  if (targets.empty()) throw MetricError("sets are disconnected inside the ball");
  std::size_t here = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
  Word reversed;
  while (dist[here] != Rational(0)) {
    std::vector<const ComplexBall::Arc*> preds;
    for (const auto& arc : ball.arcs(here))
      if (dist[arc.to] >= 0 && dist[arc.to] + spec.width(arc.step.gen) == dist[here]) preds.push_back(&arc);
    const auto* arc = preds[std::uniform_int_distribution<std::size_t>(0, preds.size() - 1)(rng)];
    reversed.push_back(arc->step.inverted());
    here = arc->to;
  }
  return {ball.vertices()[here], Word(reversed.rbegin(), reversed.rend())};
}

}  // namespace raag
