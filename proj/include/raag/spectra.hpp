#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/minsets.hpp"

namespace raag {

class SpectraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct L1Length {
  enum class Method { CyclicFormula, StableSlope, BallMin };
  Rational value{0};
  Method method = Method::CyclicFormula;
  std::string certificate;
};

std::string method_name(L1Length::Method m);

/// Weighted length of the cyclic core of the acting element.
Rational l1_cyclic_formula(const GroupElement& g, const ActionSpec& spec);
/// |h^3|_w - |h^2|_w for the acting element h.
Rational l1_stable_slope(const GroupElement& g, const ActionSpec& spec);
/// Least displacement min_x |x^-1 h x|_w over the given vertices.
Rational l1_ball_min(const GroupElement& g, const std::vector<GroupElement>& vertices, const ActionSpec& spec);
/// Same over a ball; the ball must reach every conjugator of length |h|/2.
Rational l1_ball_min(const GroupElement& g, const ComplexBall& ball, const ActionSpec& spec);

/// Cyclic formula, cross-checked against the stable slope; a disagreement
/// throws SpectraError.
L1Length l1_length(const GroupElement& g, const ActionSpec& spec);

struct M1 {
  Rational value{0};
  GroupElement witness;  // least element of D attaining the maximum
  int radius = 4;
};

/// Maximum of l1 over the elements of length at most radius.
M1 m1_of_action(const ActionSpec& spec, int radius = 4);

/// Distinct conjugacy classes of elements of length at most max_length.
std::vector<ConjClassId> classes_up_to(const GraphPtr& graph, int max_length);

struct LengthSpectrum {
  ActionSpec action;
  std::vector<std::pair<ConjClassId, Rational>> entries;  // in class order
  M1 m1;
  Rational scale{1};  // 7 m1

  Rational scaled(std::size_t i) const { return entries.at(i).second / scale; }
};

LengthSpectrum length_spectrum(const ActionSpec& spec, const std::vector<ConjClassId>& classes, int d_radius = 4);

struct Comparison {
  bool projectively_equal = true;
  Rational ratio{1};  // second / first on the reference class
  std::optional<ConjClassId> witness;
};

/// Whether the two spectra on the class set are positive multiples of each
/// other. The ratio is read off the first class with a non-zero entry.
Comparison compare_actions(const ActionSpec& s1, const ActionSpec& s2, const std::vector<ConjClassId>& classes);

struct CheckInstance {
  std::string label;
  Rational lhs{0};
  Rational rhs{0};
  Rational margin{0};  // rhs - lhs
};

struct CheckRecord {
  CheckRecord() = default;
  CheckRecord(std::string n, std::string d) : name(std::move(n)), domain(std::move(d)) {}

  std::string name;
  std::string domain;
  std::size_t count = 0;
  bool pass = true;
  std::optional<CheckInstance> worst;
  std::vector<CheckInstance> instances;  // kept for the small checks only

  void add(CheckInstance c, bool keep);
};

struct VerifyOptions {
  int geometry_radius = 4;
  int d_radius = 4;
};

struct BoundReport {
  int radius = 0;
  int geometry_radius = 0;  // raised to fit non-parabolic minsets
  M1 m1;
  std::vector<Basepoint> basepoints;  // one per generator v acting as a generator conjugate
  Rational keya_worst_ratio{0};
  std::optional<GroupElement> keya_worst_element;
  std::vector<CheckRecord> checks;

  bool pass() const;
};

/// Checks, with exact margins: d1(Min u, Min w) <= M1 for every generator
/// pair; d1(x0, Min u) <= 3 M1 for the basepoint x0 of
/// every admissible v; l1(g) <= 7 M1 ||g|| over
/// the ball of the given radius; and the scaled spectrum bounds.
BoundReport verify_bounds(const ActionSpec& spec, int radius, const VerifyOptions& options = {});

}  // namespace raag
