#include "raag/spectra.hpp"

#include <algorithm>
#include <set>

namespace raag {

std::string method_name(L1Length::Method m) {
  switch (m) {
    case L1Length::Method::CyclicFormula:
      return "cyclic-formula";
    case L1Length::Method::StableSlope:
      return "stable-slope";
    case L1Length::Method::BallMin:
      return "ball-min";
  }
  return "unknown";
}

Rational l1_cyclic_formula(const GroupElement& g, const ActionSpec& spec) {
  return weighted_length(cyclic_reduction(spec.acting(g)).core, spec);
}

Rational l1_stable_slope(const GroupElement& g, const ActionSpec& spec) {
  const GroupElement h = spec.acting(g);
  return weighted_length(power(h, 3), spec) - weighted_length(power(h, 2), spec);
}

Rational l1_ball_min(const GroupElement& g, const std::vector<GroupElement>& vertices, const ActionSpec& spec) {
  if (vertices.empty()) throw SpectraError("ball-min over an empty vertex set");
  const GroupElement h = spec.acting(g);
  Rational best(-1);
  for (const auto& x : vertices) {
    Rational d = weighted_length(invert(x) * h * x, spec);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Rational l1_ball_min(const GroupElement& g, const ComplexBall& ball, const ActionSpec& spec) {
  const GroupElement h = spec.acting(g);
  if (2 * static_cast<std::size_t>(ball.radius()) < h.length())
    throw WindowError("ball-min for " + format_word(g) + " needs radius " + std::to_string((h.length() + 1) / 2));
  return l1_ball_min(g, ball.vertices(), spec);
}

L1Length l1_length(const GroupElement& g, const ActionSpec& spec) {
  const GroupElement core = cyclic_reduction(spec.acting(g)).core;
  L1Length out;
  out.value = weighted_length(core, spec);
  const Rational slope = l1_stable_slope(g, spec);
  if (slope != out.value)
    throw SpectraError("l1 of " + format_word(g) + ": cyclic formula " + format_rational(out.value) +
                       " disagrees with stable slope " + format_rational(slope));
  out.certificate = "core '" + format_word(core) + "', stable slope " + format_rational(slope);
  return out;
}

M1 m1_of_action(const ActionSpec& spec, int radius) {
  M1 out;
  out.radius = radius;
  out.witness = spec.identity();
  for (const auto& g : enumerate_ball(spec.graph, radius)) {
    Rational l = l1_length(g, spec).value;
    if (l > out.value) {
      out.value = l;
      out.witness = g;
    }
  }
  if (out.value <= 0) throw SpectraError("M1 vanishes; radius " + std::to_string(radius) + " is too small");
  return out;
}

std::vector<ConjClassId> classes_up_to(const GraphPtr& graph, int max_length) {
  std::set<ConjClassId> seen;
  for (const auto& g : enumerate_ball(graph, max_length)) seen.insert(conjugacy_canonical(g));
  return {seen.begin(), seen.end()};
}

LengthSpectrum length_spectrum(const ActionSpec& spec, const std::vector<ConjClassId>& classes, int d_radius) {
  LengthSpectrum out{spec, {}, m1_of_action(spec, d_radius), Rational(1)};
  out.scale = out.m1.value * 7;
  for (const auto& c : classes)
    out.entries.emplace_back(c, l1_length(class_representative(spec.graph, c), spec).value);
  return out;
}

Comparison compare_actions(const ActionSpec& s1, const ActionSpec& s2, const std::vector<ConjClassId>& classes) {
  if (classes.empty()) throw SpectraError("comparison needs at least one class");
  if (s1.graph->names() != s2.graph->names() || s1.graph->edges() != s2.graph->edges())
    throw SpectraError("actions are over different graphs");
  Comparison out;
  std::optional<Rational> ratio;
  for (const auto& c : classes) {
    const Rational a = l1_length(class_representative(s1.graph, c), s1).value;
    const Rational b = l1_length(class_representative(s2.graph, c), s2).value;
    if (!ratio) {
      if (a == Rational(0) && b == Rational(0)) continue;
      if (a == Rational(0) || b == Rational(0)) return {false, Rational(0), c};
      ratio = b / a;
      out.ratio = *ratio;
      continue;
    }
    if (b != a * *ratio) return {false, *ratio, c};
  }
  return out;
}

void CheckRecord::add(CheckInstance c, bool keep) {
  ++count;
  if (c.margin < 0) pass = false;
  if (!worst || c.margin < worst->margin) worst = c;
  if (keep) instances.push_back(std::move(c));
}

bool BoundReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

BoundReport verify_bounds(const ActionSpec& spec, int radius, const VerifyOptions& options) {
  if (radius < 4) throw SpectraError("verify needs radius >= 4");
  const DefiningGraph& graph = *spec.graph;
  const int n = graph.vertex_count();
  BoundReport report;
  report.radius = radius;
  report.m1 = m1_of_action(spec, options.d_radius);
  const Rational m1 = report.m1.value;
  int geometry_radius = options.geometry_radius;
  for (VertexId u = 0; u < n; ++u)
    if (!minset_coset(spec.gen(u), spec)) {
      const GroupElement h = spec.acting(spec.gen(u));
      geometry_radius = std::max(geometry_radius, static_cast<int>(h.length() + cyclic_length(h) + 2));
    }
  report.geometry_radius = geometry_radius;
  const ComplexBall ball = build_ball(spec.graph, geometry_radius);
  const GeneratorMinsets minsets(ball, spec);

  CheckRecord a1{"minset-distance", "d1(Min u, Min w) <= M1 over generator pairs"};
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w = u + 1; w < n; ++w) {
      Rational d = minsets.distance(u, w);
      a1.add({"Min(" + graph.name(u) + "), Min(" + graph.name(w) + ")", d, m1, m1 - d}, true);
    }
  report.checks.push_back(std::move(a1));

  CheckRecord bc{"basepoint-distance", "d1(x0, Min u) <= 3 M1 over generators u, for every admissible v"};
  for (VertexId v = 0; v < n; ++v) {
    if (!minset_product(v, spec)) continue;
    Basepoint b = choose_basepoint(v, minsets);
    for (VertexId u = 0; u < n; ++u) {
      Rational d = minsets.distance_to(b.vertex, u);
      bc.add({"x0[" + graph.name(v) + "], Min(" + graph.name(u) + ")", d, m1 * 3, m1 * 3 - d}, true);
    }
    report.basepoints.push_back(std::move(b));
  }
  if (report.basepoints.empty())
    throw SpectraError("no generator acts as a conjugate of a generator; basepoint undefined");
  report.checks.push_back(std::move(bc));

  CheckRecord keya{"length-bound", "l1(g) <= 7 M1 ||g|| over |g| <= " + std::to_string(radius)};
  CheckRecord kup{"scaled-upper", "l1(g) / (7 M1) <= ||g|| over |g| <= " + std::to_string(radius)};
  const Rational scale = m1 * 7;
  for (const auto& g : enumerate_ball(spec.graph, radius)) {
    if (g.is_identity()) continue;
    const Rational l = l1_length(g, spec).value;
    const Rational norm(static_cast<std::int64_t>(cyclic_length(g)));
    const std::string label = format_word(g);
    keya.add({label, l, scale * norm, scale * norm - l}, false);
    kup.add({label, l / scale, norm, norm - l / scale}, false);
    const Rational ratio = l / (m1 * norm);
    if (!report.keya_worst_element || ratio > report.keya_worst_ratio) {
      report.keya_worst_ratio = ratio;
      report.keya_worst_element = g;
    }
  }
  report.checks.push_back(std::move(keya));
  report.checks.push_back(std::move(kup));

  CheckRecord kw{"scaled-witness", "l1(d*) / (7 M1) = 1/7 at the M1 witness"};
  const Rational lw = l1_length(report.m1.witness, spec).value / scale;
  const Rational gap = lw - Rational(1, 7);
  kw.add({format_word(report.m1.witness), lw, Rational(1, 7), gap < 0 ? gap : -gap}, true);
  report.checks.push_back(std::move(kw));
  return report;
}

}  // namespace raag
