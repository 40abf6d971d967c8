#include "raag/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace raag {

namespace {

void require_same_graph(const GroupElement& x, const GroupElement& y) {
  if (x.graph_ptr() != y.graph_ptr())
    throw WordError("elements belong to different defining graphs");
}

// Appends one letter to a reduced word, cancelling against an end-movable
// inverse if there is one.
void reduce_append(const DefiningGraph& g, Word& w, Letter x) {
  for (std::size_t j = w.size(); j-- > 0;) {
    Letter y = w[j];
    if (y.gen == x.gen) {
      if (y.inverse != x.inverse) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        return;
      }
      break;
    }
    if (!g.adjacent(y.gen, x.gen)) break;
  }
  w.push_back(x);
}

// Lexicographically least word in the commutation class of a reduced word:
// repeatedly emit the least letter that can be swapped to the front.
Word canonicalize(const DefiningGraph& g, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (best < w.size() && w[i].code() >= w[best].code()) continue;
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) movable = letters_commute(g, w[j], w[i]);
      if (movable) best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word without(const Word& w, std::size_t i) {
  Word out = w;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

}  // namespace

bool letters_commute(const DefiningGraph& g, Letter x, Letter y) {
  return x.gen != y.gen && g.adjacent(x.gen, y.gen);
}

GroupElement normal_form(std::span<const Letter> letters, const GraphPtr& graph) {
  if (!graph) throw WordError("no defining graph");
  const DefiningGraph& g = *graph;
  Word w;
  w.reserve(letters.size());
  for (Letter l : letters) {
    if (l.gen < 0 || l.gen >= g.vertex_count())
      throw WordError("letter index " + std::to_string(l.gen) + " out of range");
    reduce_append(g, w, l);
  }
  GroupElement out(graph);
  out.word_ = canonicalize(g, std::move(w));
  return out;
}

GroupElement GroupElement::from_letters(GraphPtr graph, std::span<const Letter> letters) {
  return normal_form(letters, graph);
}

GroupElement GroupElement::generator(GraphPtr graph, VertexId v, bool inverse) {
  Letter l{v, inverse};
  return normal_form(std::span<const Letter>(&l, 1), graph);
}

VertexMask GroupElement::support() const {
  VertexMask m = 0;
  for (auto l : word_) m |= bit(l.gen);
  return m;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(),
                                                b.word_.end());
}

std::vector<std::size_t> front_movable(const DefiningGraph& g, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = letters_commute(g, w[j], w[i]);
    if (ok) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> end_movable(const DefiningGraph& g, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < w.size() && ok; ++j) ok = letters_commute(g, w[j], w[i]);
    if (ok) out.push_back(i);
  }
  return out;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  require_same_graph(x, y);
  Word w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return normal_form(w, x.graph_ptr());
}

GroupElement invert(const GroupElement& x) {
  Word w;
  w.reserve(x.length());
  for (auto it = x.word().rbegin(); it != x.word().rend(); ++it) w.push_back(it->inverted());
  return normal_form(w, x.graph_ptr());
}

GroupElement power(const GroupElement& x, int n) {
  const GroupElement base = n < 0 ? invert(x) : x;
  Word w;
  for (int i = 0; i < std::abs(n); ++i) w.insert(w.end(), base.word().begin(), base.word().end());
  return normal_form(w, x.graph_ptr());
}

GroupElement parse_word(const GraphPtr& graph, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    bool inverse = false;
    std::string_view name = tok;
    if (auto v = graph->find(tok)) {
      w.push_back({*v, false});
      continue;
    }
    if (tok.size() > 1 && tok.back() == '\'') {
      inverse = true;
      name = tok.substr(0, tok.size() - 1);
    }
    if (auto v = graph->find(name)) {
      w.push_back({*v, inverse});
    } else if (tok == "1") {
      continue;
    } else {
      throw WordError("unknown generator '" + std::string(name) + "' in word '" + std::string(text) + "'");
    }
  }
  return normal_form(w, graph);
}

std::string format_word(const DefiningGraph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i].gen);
    if (w[i].inverse) out += '\'';
  }
  return out;
}

std::string format_word(const GroupElement& g) { return format_word(g.graph(), g.word()); }

CyclicReduction cyclic_reduction(const GroupElement& g) {
  const DefiningGraph& gr = g.graph();
  Word w = g.word();
  Word conj;
  for (;;) {
    bool stripped = false;
    auto fronts = front_movable(gr, w);
    std::sort(fronts.begin(), fronts.end(), [&](auto a, auto b) { return w[a].code() < w[b].code(); });
    auto ends = end_movable(gr, w);
    for (std::size_t i : fronts) {
      auto j = std::find_if(ends.begin(), ends.end(), [&](std::size_t k) { return w[k] == w[i].inverted(); });
      if (j == ends.end()) continue;
      conj.push_back(w[i]);
      std::size_t hi = std::max(i, *j), lo = std::min(i, *j);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(hi));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(lo));
      stripped = true;
      break;
    }
    if (!stripped) break;
  }
  return {normal_form(conj, g.graph_ptr()), normal_form(w, g.graph_ptr())};
}

bool is_cyclically_reduced(const GroupElement& g) { return cyclic_reduction(g).conjugator.is_identity(); }

ConjClassId conjugacy_canonical(const GroupElement& g, std::size_t budget) {
  const GroupElement core = cyclic_reduction(g).core;
  const DefiningGraph& gr = g.graph();
  std::set<Word> seen{core.word()};
  std::deque<Word> queue{core.word()};
  Word best = core.word();
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i : front_movable(gr, w)) {
      Word rotated = without(w, i);
      rotated.push_back(w[i]);
      Word canon = normal_form(rotated, g.graph_ptr()).word();
      if (seen.insert(canon).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("conjugacy orbit exceeds budget of " + std::to_string(budget), seen.size());
        if (canon < best) best = canon;
        queue.push_back(std::move(canon));
      }
    }
  }
  return {best};
}

GroupElement class_representative(const GraphPtr& graph, const ConjClassId& c) {
  return normal_form(c.word, graph);
}

std::pair<GroupElement, int> maximal_root(const GroupElement& h) {
  if (h.is_identity()) throw WordError("maximal root of the identity");
  const int n = static_cast<int>(h.length());
  std::vector<int> count(h.graph().vertex_count(), 0);
  for (auto l : h.word()) ++count[l.gen];
  int g = 0;
  for (int c : count) g = std::gcd(g, c);
  for (int k = g; k >= 1; --k) {
    if (g % k != 0 || n % k != 0) continue;
    std::vector<int> take(count.size());
    for (std::size_t v = 0; v < count.size(); ++v) take[v] = count[v] / k;
    Word r;
    for (auto l : h.word())
      if (take[l.gen]-- > 0) r.push_back(l);
    GroupElement root = normal_form(r, h.graph_ptr());
    if (root.length() * static_cast<std::size_t>(k) == h.length() && power(root, k) == h) return {root, k};
  }
  return {h, 1};
}

CentralizerData centralizer_data(const GroupElement& h) {
  if (h.is_identity()) throw WordError("centralizer data requires a non-trivial element");
  if (!is_cyclically_reduced(h)) throw WordError("centralizer data requires a cyclically reduced element");
  const DefiningGraph& g = h.graph();
  const VertexMask supp = h.support();
  CentralizerData out;
  for (VertexMask factor : max_join_decomposition(g, supp).factors) {
    Word projected;
    for (auto l : h.word())
      if (has(factor, l.gen)) projected.push_back(l);
    auto [root, m] = maximal_root(normal_form(projected, h.graph_ptr()));
    out.pure_factors.push_back({root, m, factor});
  }
  VertexMask link = g.all();
  for (VertexId v : members(supp)) link &= g.neighbors(v);
  out.link_part = link;
  return out;
}

bool in_centralizer(const CentralizerData& c, const GroupElement& k) {
  VertexMask allowed = c.link_part;
  for (const auto& f : c.pure_factors) allowed |= f.support;
  if (k.support() & ~allowed) return false;
  for (const auto& f : c.pure_factors) {
    Word projected;
    for (auto l : k.word())
      if (has(f.support, l.gen)) projected.push_back(l);
    if (projected.empty()) continue;
    GroupElement p = normal_form(projected, k.graph_ptr());
    const std::size_t len = f.root.length();
    if (p.length() % len != 0) return false;
    const int e = static_cast<int>(p.length() / len);
    if (p != power(f.root, e) && p != power(f.root, -e)) return false;
  }
  return true;
}

std::vector<GroupElement> enumerate_ball(const GraphPtr& graph, int radius, std::size_t budget) {
  if (radius < 0) throw WordError("ball radius must be non-negative");
  const int n = graph->vertex_count();
  std::vector<GroupElement> all{GroupElement(graph)};
  std::vector<GroupElement> frontier = all;
  for (int r = 1; r <= radius; ++r) {
    std::unordered_set<GroupElement> next;
    for (const auto& x : frontier) {
      for (VertexId v = 0; v < n; ++v) {
        for (bool inv : {false, true}) {
          Word w = x.word();
          w.push_back({v, inv});
          GroupElement y = normal_form(w, graph);
          if (static_cast<int>(y.length()) == r) next.insert(std::move(y));
        }
      }
      if (all.size() + next.size() > budget)
        throw BudgetExceeded("ball of radius " + std::to_string(radius) + " exceeds budget of " +
                                 std::to_string(budget) + " elements",
                             all.size() + next.size());
    }
    frontier.assign(next.begin(), next.end());
    std::sort(frontier.begin(), frontier.end());
    all.insert(all.end(), frontier.begin(), frontier.end());
  }
  return all;
}

}  // namespace raag
