#include "raag/minsets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace raag {

ParabolicCoset ParabolicCoset::make(const GroupElement& g, VertexMask gens) {
  return {coset_representative(g, gens), gens};
}

bool ParabolicCoset::contains(const GroupElement& x) const {
  return ((invert(rep) * x).support() & ~gens) == 0;
}

Rational coset_distance(const ParabolicCoset& a, const ParabolicCoset& b, const ActionSpec& spec) {
  GroupElement w = invert(a.rep) * b.rep;
  for (;;) {
    GroupElement next = coset_representative(left_coset_representative(w, a.gens), b.gens);
    if (next == w) break;
    w = std::move(next);
  }
  return weighted_length(w, spec);
}

Rational point_coset_distance(const GroupElement& x, const ParabolicCoset& c, const ActionSpec& spec) {
  return coset_distance({x, 0}, c, spec);
}

std::optional<ParabolicCoset> minset_coset(const GroupElement& g, const ActionSpec& spec) {
  const GroupElement h = spec.acting(g);
  const DefiningGraph& graph = *spec.graph;
  if (h.is_identity()) return ParabolicCoset{h, graph.all()};
  auto [b, core] = cyclic_reduction(h);
  const VertexMask supp = core.support();
  const auto gens = members(supp);
  bool clique = true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) clique = clique && graph.adjacent(gens[i], gens[j]);
  if (!clique) return std::nullopt;
  VertexMask link = graph.all();
  for (VertexId s : gens) link &= graph.neighbors(s);
  return ParabolicCoset::make(b, supp | link);
}

Rational displacement(const GroupElement& g, const GroupElement& x, const ActionSpec& spec) {
  return weighted_length(invert(x) * spec.acting(g) * x, spec);
}

bool axis_certificate(const GroupElement& g, const GroupElement& x, const ActionSpec& spec, int n) {
  if (n < 2) throw MinsetError("axis certificate needs N >= 2");
  const GroupElement h = spec.acting(g);
  const GroupElement xi = invert(x);
  return weighted_length(xi * power(h, n) * x, spec) == weighted_length(xi * h * x, spec) * n;
}

MinsetSlice min1_in_ball(const GroupElement& g, const ComplexBall& ball, const ActionSpec& spec) {
  const GroupElement h = spec.acting(g);
  const std::size_t need = h.length() + cyclic_length(h) + 2;
  if (static_cast<std::size_t>(ball.radius()) < need)
    throw WindowError("minset of " + format_word(g) + " needs a ball of radius " + std::to_string(need) +
                      ", got " + std::to_string(ball.radius()));
  MinsetSlice out{g, {}, Rational(-1)};
  for (const auto& x : ball.vertices()) {
    Rational d = weighted_length(invert(x) * h * x, spec);
    if (out.l1_value < 0 || d < out.l1_value) {
      out.l1_value = d;
      out.vertices.clear();
    }
    if (d == out.l1_value) out.vertices.push_back(x);
  }
  for (const auto& x : out.vertices)
    if (!axis_certificate(g, x, spec))
      throw MinsetError("axis certificate fails for " + format_word(g) + " at " + format_word(x));
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

GroupElement MinsetProduct::tree_coord(const GroupElement& x) const {
  const GroupElement y = invert(base_vertex) * x;
  if (y.support() & ~coset.gens) throw MinsetError(format_word(x) + " is not in the minset");
  Word w;
  for (auto l : y.word())
    if (l.gen != axis_gen) w.push_back(l);
  return normal_form(w, x.graph_ptr());
}

int MinsetProduct::line_coord(const GroupElement& x) const {
  const GroupElement y = invert(base_vertex) * x;
  if (y.support() & ~coset.gens) throw MinsetError(format_word(x) + " is not in the minset");
  int k = 0;
  for (auto l : y.word())
    if (l.gen == axis_gen) k += l.inverse ? -1 : 1;
  return k;
}

GroupElement MinsetProduct::point(const GroupElement& tree, int line) const {
  return base_vertex * tree * power(GroupElement::generator(tree.graph_ptr(), axis_gen), line);
}

std::optional<MinsetProduct> minset_product(VertexId v, const ActionSpec& spec) {
  auto [b, core] = cyclic_reduction(spec.acting(spec.gen(v)));
  if (core.length() != 1) return std::nullopt;
  const VertexId s = core.word()[0].gen;
  ParabolicCoset coset = ParabolicCoset::make(b, spec.graph->neighbors(s) | bit(s));
  return MinsetProduct{coset.rep, s, coset};
}

MinsetView MinsetView::of(const GroupElement& g, const ComplexBall& ball, const ActionSpec& spec) {
  MinsetView m;
  m.coset = minset_coset(g, spec);
  if (m.coset) {
    for (const auto& x : ball.vertices())
      if (m.coset->contains(x)) m.slice.push_back(x);
  } else {
    m.slice = min1_in_ball(g, ball, spec).vertices;
  }
  if (m.slice.empty())
    throw WindowError("minset of " + format_word(g) + " does not meet the ball of radius " +
                      std::to_string(ball.radius()));
  return m;
}

Rational MinsetView::distance_to(const GroupElement& x, const ActionSpec& spec) const {
  if (coset) return point_coset_distance(x, *coset, spec);
  Rational best(-1);
  for (const auto& y : slice) {
    Rational d = d1(x, y, spec);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Rational minset_distance(const MinsetView& a, const MinsetView& b, const ActionSpec& spec) {
  if (a.coset && b.coset) return coset_distance(*a.coset, *b.coset, spec);
  const MinsetView& scan = a.coset ? b : a;
  const MinsetView& other = a.coset ? a : b;
  Rational best(-1);
  for (const auto& x : scan.slice) {
    Rational d = other.distance_to(x, spec);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

GeneratorMinsets::GeneratorMinsets(const ComplexBall& ball, const ActionSpec& spec)
    : ball_(&ball), spec_(&spec), views_(spec.graph->vertex_count()) {}

const MinsetView& GeneratorMinsets::operator[](VertexId u) const {
  auto& slot = views_.at(u);
  if (!slot) slot = MinsetView::of(spec_->gen(u), *ball_, *spec_);
  return *slot;
}

BridgeSlice bridge_pu(VertexId v, VertexId u, const ComplexBall& ball, const ActionSpec& spec) {
  return bridge_pu(v, u, GeneratorMinsets(ball, spec));
}

BridgeSlice bridge_pu(VertexId v, VertexId u, const GeneratorMinsets& minsets) {
  const ActionSpec& spec = minsets.spec();
  const ComplexBall& ball = minsets.ball();
  const DefiningGraph& graph = *spec.graph;
  if (u == v) throw MinsetError("bridge needs two distinct generators");
  auto product = minset_product(v, spec);
  if (!product) throw MinsetError("generator " + graph.name(v) + " does not act as a conjugate of a generator");
  const MinsetView& mv = minsets[v];
  const MinsetView& mu = minsets[u];

  BridgeSlice out{v, u, minset_distance(mv, mu, spec), {}, {}, {}, true};
  for (const auto& p : mv.slice)
    if (mu.distance_to(p, spec) == out.distance) out.vertices.push_back(p);
  if (out.vertices.empty())
    throw WindowError("bridge from Min(" + graph.name(v) + ") to Min(" + graph.name(u) +
                      ") is not represented in the ball of radius " + std::to_string(ball.radius()));

  std::set<GroupElement> trees;
  std::set<int> lines;
  for (const auto& p : out.vertices) {
    trees.insert(product->tree_coord(p));
    lines.insert(product->line_coord(p));
  }
  out.tree_factor.assign(trees.begin(), trees.end());
  out.line_factor.assign(lines.begin(), lines.end());
  for (const auto& t : out.tree_factor)
    for (int k : out.line_factor) {
      GroupElement p = product->point(t, k);
      if (ball.contains(p) && !set_contains(out.vertices, p)) out.product_ok = false;
    }
  return out;
}

void Tree::add_edge(int a, int b) {
  adjacent.at(a).push_back(b);
  adjacent.at(b).push_back(a);
}

std::vector<int> Tree::spanning_path(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> parent(size(), -2);
  std::deque<int> queue;
  for (int x : a) {
    parent.at(x) = -1;
    queue.push_back(x);
  }
  std::vector<char> target(size(), 0);
  for (int y : b) target.at(y) = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (target[x]) {
      std::vector<int> path;
      for (int z = x; z != -1; z = parent[z]) path.push_back(z);
      return path;
    }
    for (int y : adjacent[x])
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  throw MinsetError("subtrees lie in different components");
}

bool Tree::is_subtree(const std::vector<int>& s) const {
  if (s.empty()) return false;
  std::vector<char> in(size(), 0), seen(size(), 0);
  for (int x : s) in.at(x) = 1;
  std::deque<int> queue{s.front()};
  seen[s.front()] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adjacent[x])
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++count;
        queue.push_back(y);
      }
  }
  return count == std::set<int>(s.begin(), s.end()).size();
}

std::optional<std::pair<std::size_t, std::size_t>> tree_disjoint_pair(const std::vector<std::vector<int>>& subtrees,
                                                                      const Tree& tree) {
  for (std::size_t i = 0; i < subtrees.size(); ++i)
    if (!tree.is_subtree(subtrees[i])) throw MinsetError("subtree " + std::to_string(i) + " is empty or disconnected");
  if (subtrees.empty()) return std::nullopt;
  auto as_set = [](const std::vector<int>& s) { return std::set<int>(s.begin(), s.end()); };
  std::set<int> running = as_set(subtrees[0]);
  for (std::size_t k = 1; k < subtrees.size(); ++k) {
    const std::set<int> tk = as_set(subtrees[k]);
    std::set<int> next;
    std::set_intersection(running.begin(), running.end(), tk.begin(), tk.end(), std::inserter(next, next.end()));
    if (!next.empty()) {
      running = std::move(next);
      continue;
    }
    // The earlier subtrees share a vertex, so a disjoint pair involves T_k.
    for (std::size_t j = 0; j < k; ++j) {
      bool meet = std::any_of(subtrees[j].begin(), subtrees[j].end(), [&](int x) { return tk.count(x) != 0; });
      if (!meet) return std::pair{j, k};
    }
    throw MinsetError("subtree family violates the Helly property");
  }
  return std::nullopt;
}

namespace {

// Chooses one coordinate: the least label in the common intersection, or the
// least label on the spanning path of a disjoint pair.
template <class Label, class Less>
std::pair<Label, CoordinateChoice> choose_coordinate(const std::vector<std::vector<Label>>& factors,
                                                     const std::vector<VertexId>& owners, const Tree& tree,
                                                     const std::vector<Label>& labels,
                                                     const std::map<Label, int, Less>& ids, Less less) {
  std::vector<std::vector<int>> subtrees;
  for (const auto& f : factors) {
    std::vector<int> s;
    for (const auto& l : f) s.push_back(ids.at(l));
    subtrees.push_back(std::move(s));
  }
  std::vector<int> candidates;
  CoordinateChoice choice;
  if (auto pair = tree_disjoint_pair(subtrees, tree)) {
    candidates = tree.spanning_path(subtrees[pair->first], subtrees[pair->second]);
    choice.disjoint_pair = {owners[pair->first], owners[pair->second]};
  } else {
    std::set<int> common(subtrees[0].begin(), subtrees[0].end());
    for (const auto& s : subtrees) {
      std::set<int> next;
      for (int x : s)
        if (common.count(x)) next.insert(x);
      common = std::move(next);
    }
    candidates.assign(common.begin(), common.end());
  }
  Label best = labels[candidates.front()];
  for (int c : candidates)
    if (less(labels[c], best)) best = labels[c];
  return {best, choice};
}

struct LineLess {
  bool operator()(int a, int b) const {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
  }
};

}  // namespace

Basepoint choose_basepoint(VertexId v, const ComplexBall& ball, const ActionSpec& spec) {
  return choose_basepoint(v, GeneratorMinsets(ball, spec));
}

Basepoint choose_basepoint(VertexId v, const GeneratorMinsets& minsets) {
  const ActionSpec& spec = minsets.spec();
  const DefiningGraph& graph = *spec.graph;
  auto product = minset_product(v, spec);
  if (!product) throw MinsetError("generator " + graph.name(v) + " does not act as a conjugate of a generator");

  Basepoint out;
  out.v = v;
  std::vector<VertexId> owners;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    if (u == v) continue;
    out.bridges.push_back(bridge_pu(v, u, minsets));
    owners.push_back(u);
  }
  if (out.bridges.empty()) {
    out.vertex = product->base_vertex;
    out.tree_coord = spec.identity();
    return out;
  }

  // Tree coordinate: the subtree of the Cayley tree of <lk(s)> spanned by all
  // prefixes of the coordinates that occur.
  {
    std::map<GroupElement, int, std::less<>> ids;
    std::vector<GroupElement> labels;
    Tree tree;
    auto intern = [&](const GroupElement& g) {
      auto [it, fresh] = ids.emplace(g, static_cast<int>(labels.size()));
      if (fresh) {
        labels.push_back(g);
        tree.adjacent.emplace_back();
      }
      return it->second;
    };
    intern(spec.identity());
    std::vector<std::vector<GroupElement>> factors;
    for (const auto& b : out.bridges) {
      factors.push_back(b.tree_factor);
      for (const auto& t : b.tree_factor) {
        Word prefix;
        int prev = intern(spec.identity());
        for (auto l : t.word()) {
          prefix.push_back(l);
          int here = intern(normal_form(prefix, spec.graph));
          auto& adj = tree.adjacent[here];
          if (std::find(adj.begin(), adj.end(), prev) == adj.end()) tree.add_edge(prev, here);
          prev = here;
        }
      }
    }
    auto [label, choice] = choose_coordinate(factors, owners, tree, labels, ids, std::less<>());
    out.tree_coord = label;
    out.tree_witness = choice;
  }

  // Line coordinate: a path on the occurring exponents.
  {
    int lo = 0, hi = 0;
    std::vector<std::vector<int>> factors;
    for (const auto& b : out.bridges) {
      factors.push_back(b.line_factor);
      lo = std::min(lo, b.line_factor.front());
      hi = std::max(hi, b.line_factor.back());
    }
    Tree line;
    line.adjacent.resize(hi - lo + 1);
    std::vector<int> labels;
    std::map<int, int, LineLess> ids;
    for (int k = lo; k <= hi; ++k) {
      ids.emplace(k, k - lo);
      labels.push_back(k);
      if (k > lo) line.add_edge(k - lo - 1, k - lo);
    }
    auto [label, choice] = choose_coordinate(factors, owners, line, labels, ids, LineLess());
    out.line_coord = label;
    out.line_witness = choice;
  }
  out.vertex = product->point(out.tree_coord, out.line_coord);
  return out;
}

bool is_gridline(const GroupElement& g, const ActionSpec& spec) {
  const GroupElement h = spec.acting(g);
  if (h.is_identity()) return false;
  return popcount(cyclic_reduction(h).core.support()) == 1;
}

GroupElement select_flat_representative(VertexId u, VertexId u2, const ActionSpec& spec) {
  const DefiningGraph& graph = *spec.graph;
  if (!graph.adjacent(u, u2))
    throw MinsetError(graph.name(u) + " and " + graph.name(u2) + " are not adjacent");
  if (!is_gridline(spec.gen(u), spec)) return spec.gen(u);
  if (!is_gridline(spec.gen(u2), spec)) return spec.gen(u2);
  return spec.gen(u) * spec.gen(u2);
}

}  // namespace raag
