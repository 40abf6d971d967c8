#include <gtest/gtest.h>

#include "raag/spectra.hpp"
#include "support.hpp"

using namespace raag;
using raag::testing::random_element;

namespace {

ActionSpec action(const std::string& name) {
  return load_action_spec(raag::testing::data_path("actions/" + name + ".json"));
}

}  // namespace

TEST(L1, Examples) {
  auto spec = ActionSpec::untwisted(raag::testing::path_graph());
  EXPECT_EQ(l1_length(spec.element("a c"), spec).value, Rational(2));
  EXPECT_EQ(l1_length(spec.element("c a c'"), spec).value, Rational(1));
  EXPECT_EQ(l1_length(spec.identity(), spec).value, Rational(0));
  auto tw = action("path3_transvection");
  // a acts as a b: 1/4 + 3/2.
  EXPECT_EQ(l1_length(tw.element("a"), tw).value, Rational(7, 4));
  EXPECT_EQ(method_name(L1Length::Method::StableSlope), "stable-slope");
}

TEST(L1, TripleAgreement) {
  for (const char* name : {"path3_transvection", "path3_symmetry", "c5_rotation"}) {
    auto spec = action(name);
    auto conj = enumerate_ball(spec.graph, 2);
    for (const auto& g : enumerate_ball(spec.graph, 4)) {
      const Rational a = l1_cyclic_formula(g, spec);
      EXPECT_EQ(a, l1_stable_slope(g, spec)) << name << " " << format_word(g);
      if (spec.acting(g).length() <= 4) EXPECT_EQ(a, l1_ball_min(g, conj, spec)) << name << " " << format_word(g);
    }
  }
}

TEST(L1, BallMinWindow) {
  auto spec = ActionSpec::untwisted(raag::testing::path_graph());
  auto ball = build_ball(spec, 2);
  EXPECT_EQ(l1_ball_min(spec.element("c a c'"), ball, spec), Rational(1));
  EXPECT_THROW(l1_ball_min(spec.element("a c a c a"), ball, spec), WindowError);
  EXPECT_THROW(l1_ball_min(spec.element("a"), std::vector<GroupElement>{}, spec), SpectraError);
}

TEST(L1, ClassFunctionScalingAndTwists) {
  auto spec = action("c5_rotation");
  auto phi = Automorphism::inversion(spec.graph, 1);
  auto plain = ActionSpec::with_widths(spec.graph, spec.widths);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    auto g = random_element(spec.graph, 6, rng);
    auto k = random_element(spec.graph, 4, rng);
    const Rational l = l1_length(g, spec).value;
    EXPECT_EQ(l1_length(k * g * invert(k), spec).value, l);
    EXPECT_EQ(l1_length(g, spec.scaled(Rational(5, 3))).value, l * Rational(5, 3));
    EXPECT_EQ(l1_length(invert(g), spec).value, l);
    EXPECT_EQ(l1_length(power(g, 3), spec).value, l * 3);
    // Twisting composes: (spec twisted by phi) acts as twist o phi.
    EXPECT_EQ(l1_length(g, spec.twisted(phi)).value, l1_length(g, plain.twisted(spec.twist->compose(phi))).value);
    EXPECT_EQ(l1_length(g, spec).value, l1_length(spec.twist->apply(g), plain).value);
  }
}

TEST(M1, Examples) {
  auto unit = action("path3_unit");
  auto m = m1_of_action(unit);
  EXPECT_EQ(m.value, Rational(4));
  EXPECT_EQ(m.witness, unit.element("a a a a"));
  EXPECT_EQ(m1_of_action(action("path3_transvection")).value, Rational(16));
  EXPECT_EQ(m1_of_action(unit.scaled(Rational(1, 3))).value, Rational(4, 3));
}

TEST(Spectrum, ScaledEntriesAndWitness) {
  auto spec = action("c5_inversion");
  auto classes = classes_up_to(spec.graph, 4);
  auto s = length_spectrum(spec, classes);
  EXPECT_EQ(s.scale, s.m1.value * 7);
  ASSERT_EQ(s.entries.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto rep = class_representative(spec.graph, classes[i]);
    EXPECT_LE(s.scaled(i), Rational(static_cast<std::int64_t>(rep.length())));
  }
  EXPECT_EQ(l1_length(s.m1.witness, spec).value / s.scale, Rational(1, 7));
}

TEST(Spectrum, ClassesAreDistinctAndComplete) {
  auto g = raag::testing::path_graph();
  auto classes = classes_up_to(g, 2);
  // e, a, b, c, their inverses, and the length-two classes.
  std::set<ConjClassId> seen(classes.begin(), classes.end());
  EXPECT_EQ(seen.size(), classes.size());
  for (const auto& x : enumerate_ball(g, 2)) EXPECT_TRUE(seen.count(conjugacy_canonical(x)));
}

TEST(Compare, Examples) {
  auto spec = action("path3_transvection");
  auto classes = classes_up_to(spec.graph, 4);
  auto scaled = compare_actions(spec, spec.scaled(Rational(3, 2)), classes);
  EXPECT_TRUE(scaled.projectively_equal);
  EXPECT_EQ(scaled.ratio, Rational(3, 2));
  auto inner = compare_actions(spec, spec.twisted(Automorphism::conjugation(spec.element("b c"))), classes);
  EXPECT_TRUE(inner.projectively_equal);
  EXPECT_EQ(inner.ratio, Rational(1));
  auto distinct = compare_actions(spec, action("path3_unit"), classes);
  EXPECT_FALSE(distinct.projectively_equal);
  EXPECT_TRUE(distinct.witness.has_value());
  EXPECT_THROW(compare_actions(spec, spec, {}), SpectraError);
  EXPECT_THROW(compare_actions(spec, action("c5_rotation"), classes), SpectraError);
}

TEST(Verify, PathUnitReport) {
  auto r = verify_bounds(action("path3_unit"), 4);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.m1.value, Rational(4));
  EXPECT_EQ(r.keya_worst_ratio, Rational(1, 4));
  ASSERT_EQ(r.checks.size(), 5u);
  EXPECT_EQ(r.checks[0].name, "minset-distance");
  EXPECT_EQ(r.checks[0].count, 3u);
  EXPECT_EQ(r.checks[1].name, "basepoint-distance");
  EXPECT_EQ(r.checks[1].count, 9u);
  EXPECT_EQ(r.basepoints.size(), 3u);
  EXPECT_THROW(verify_bounds(action("path3_unit"), 3), SpectraError);
}

TEST(Verify, TransvectionRaisesGeometryRadius) {
  auto r = verify_bounds(action("path3_transvection"), 4);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.geometry_radius, 4);
  for (const auto& c : r.checks) {
    ASSERT_TRUE(c.worst);
    EXPECT_GE(c.worst->margin, 0) << c.name;
  }
}

TEST(Verify, CheckRecordTracksWorst) {
  CheckRecord r("x", "y");
  r.add({"a", Rational(1), Rational(2), Rational(1)}, true);
  r.add({"b", Rational(3), Rational(2), Rational(-1)}, false);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.worst->label, "b");
  EXPECT_EQ(r.instances.size(), 1u);
}
