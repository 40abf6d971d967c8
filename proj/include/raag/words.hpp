#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

using GraphPtr = std::shared_ptr<const DefiningGraph>;

/// A generator or its inverse. Letters order by generator declaration order
/// with x^-1 immediately after x.
struct Letter {
  VertexId gen = 0;
  bool inverse = false;

  int code() const { return 2 * gen + (inverse ? 1 : 0); }
  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) { return a.code() <=> b.code(); }
};

using Word = std::vector<Letter>;

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or orbit search exceeds its configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

/// Element of the right-angled Artin group of a defining graph, stored as its
/// canonical word: reduced, and lexicographically least among the reduced
/// words reachable from it by commuting swaps.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(GraphPtr graph) : graph_(std::move(graph)) {}

  static GroupElement from_letters(GraphPtr graph, std::span<const Letter> letters);
  static GroupElement generator(GraphPtr graph, VertexId v, bool inverse = false);

  const GraphPtr& graph_ptr() const { return graph_; }
  const DefiningGraph& graph() const { return *graph_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  VertexMask support() const;

  friend GroupElement normal_form(std::span<const Letter> letters, const GraphPtr& graph);

  /// Equality of elements; both must live over the same graph.
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.word_ == b.word_; }
  /// Shortlex order on canonical words.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  GraphPtr graph_;
  Word word_;
};

/// Letters x, y commute as distinct adjacent generators.
bool letters_commute(const DefiningGraph& g, Letter x, Letter y);

/// Fully reduced canonical form of an arbitrary letter sequence.
GroupElement normal_form(std::span<const Letter> letters, const GraphPtr& graph);

/// Positions of letters that some swap sequence brings to the front / end.
std::vector<std::size_t> front_movable(const DefiningGraph& g, const Word& w);
std::vector<std::size_t> end_movable(const DefiningGraph& g, const Word& w);

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
GroupElement power(const GroupElement& x, int n);
inline GroupElement operator*(const GroupElement& x, const GroupElement& y) { return multiply(x, y); }

/// Word literal: whitespace separated vertex names, trailing ' for inverse.
/// "" and "1" denote the identity.
GroupElement parse_word(const GraphPtr& graph, std::string_view text);
std::string format_word(const GroupElement& g);
std::string format_word(const DefiningGraph& g, const Word& w);

struct CyclicReduction {
  GroupElement conjugator;  // b
  GroupElement core;        // h, with g = b h b^-1 and |g| = |h| + 2|b|
};

CyclicReduction cyclic_reduction(const GroupElement& g);
bool is_cyclically_reduced(const GroupElement& g);
inline std::size_t cyclic_length(const GroupElement& g) { return cyclic_reduction(g).core.length(); }

/// Canonical cyclically reduced word of a conjugacy class.
struct ConjClassId {
  Word word;
  friend bool operator==(const ConjClassId&, const ConjClassId&) = default;
  friend auto operator<=>(const ConjClassId& a, const ConjClassId& b) {
    if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
    return a.word <=> b.word;
  }
};

inline constexpr std::size_t kDefaultOrbitBudget = 200000;

ConjClassId conjugacy_canonical(const GroupElement& g, std::size_t budget = kDefaultOrbitBudget);
GroupElement class_representative(const GraphPtr& graph, const ConjClassId& c);

/// Largest m with h = r^m for a word r; returns (r, m). Expects a cyclically
/// reduced, non-trivial element.
std::pair<GroupElement, int> maximal_root(const GroupElement& h);

struct CentralizerFactor {
  GroupElement root;  // a_i
  int exponent = 1;   // m_i
  VertexMask support = 0;
};

/// C(h) = <a_1, ..., a_k, lk(h)> for cyclically reduced h != 1.
struct CentralizerData {
  std::vector<CentralizerFactor> pure_factors;
  VertexMask link_part = 0;
};

CentralizerData centralizer_data(const GroupElement& h);

/// Membership of k in <a_1, ..., a_k, link_part>.
bool in_centralizer(const CentralizerData& c, const GroupElement& k);

/// All elements with |g| <= radius, in shortlex order.
std::vector<GroupElement> enumerate_ball(const GraphPtr& graph, int radius,
                                         std::size_t budget = 5'000'000);

}  // namespace raag

template <>
struct std::hash<raag::GroupElement> {
  std::size_t operator()(const raag::GroupElement& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : g.word()) {
      h ^= static_cast<std::size_t>(l.code() + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};

template <>
struct std::hash<raag::ConjClassId> {
  std::size_t operator()(const raag::ConjClassId& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : c.word) {
      h ^= static_cast<std::size_t>(l.code() + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};
