// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bochner/experiments.hpp"
#include "bochner/moments.hpp"
#include "test_util.hpp"

namespace bochner {
namespace {

const RGrid kImag = RGrid::imaginary_default();
const GaussPoly kUnit(Dim::One, 0.5, {1.0});

double mean_s(const GaussPoly& f) { return moment_report(f).mean_s; }

TEST(AnalyticTest, UnitGaussianSatisfiesEveryBound) {
  const double s = mean_s(kUnit);
  EXPECT_NEAR(s, std::sqrt(2.0 / std::numbers::pi), 1e-10);
  const BoundReport c = cosh_bound(kUnit, s, kImag);
  EXPECT_FALSE(c.first_violation);
  ASSERT_EQ(c.margin_curve.size(), 601u);
  EXPECT_EQ(c.margin_curve.front().second, 0.0);
  for (const auto& [r, m] : c.margin_curve) EXPECT_GE(m, 0.0) << r;

  const auto [sum, diff] = cosh_cos_bounds(kUnit, s, kImag);
  EXPECT_FALSE(sum.first_violation);
  EXPECT_FALSE(diff.first_violation);
  EXPECT_EQ(sum.margin_curve.front().second, 0.0);
  EXPECT_EQ(diff.margin_curve.front().second, 0.0);

  for (const BoundReport& b : omega8_bounds(kUnit, s, kImag)) {
    EXPECT_FALSE(b.first_violation) << to_string(b.id);
    EXPECT_FALSE(b.numerical_error);
    EXPECT_NEAR(b.margin_curve.front().second, 0.0, 1e-15);
  }
  EXPECT_FALSE(multicomponent_bound(kUnit, {1.0}, {0.5}, kImag).first_violation);
}

TEST(AnalyticTest, TwoDimensionalUnitGaussian) {
  const GaussPoly g(Dim::Two, 0.5, {std::numbers::sqrt2});
  const BoundReport r = i0_bound(g, mean_s(g), kImag);
  EXPECT_FALSE(r.first_violation);
  EXPECT_EQ(r.margin_curve.front().second, 0.0);
  EXPECT_THROW(i0_bound(kUnit, 1.0, kImag), std::invalid_argument);
  EXPECT_THROW(cosh_bound(g, 1.0, kImag), std::invalid_argument);
}

TEST(AnalyticTest, EightComponentExampleViolatesTheCoshBound) {
  const GaussPoly f = testing::eight_component_psi();
  const BoundReport r = cosh_bound(f, mean_s(f), kImag);
  ASSERT_TRUE(r.first_violation);
  EXPECT_LT(r.first_violation_margin, 0.0);
  const BoundReport early = cosh_bound(f, mean_s(f), kImag, {.keep_curve = false, .stop_at_first_violation = true});
  EXPECT_EQ(early.first_violation, r.first_violation);
  EXPECT_TRUE(early.margin_curve.empty());
}

TEST(AnalyticTest, CoshCosMarginsSumToTwiceTheCoshMargin) {
  std::mt19937_64 gen(67);
  for (int k = 0; k < 20; ++k) {
    const GaussPoly f = testing::random_mix(gen, Dim::One);
    const double s = std::abs(mean_s(f));
    const BoundReport c = cosh_bound(f, s, kImag);
    const auto [sum, diff] = cosh_cos_bounds(f, s, kImag);
    ASSERT_EQ(sum.margin_curve.size(), c.margin_curve.size());
    for (std::size_t i = 0; i < c.margin_curve.size(); ++i) {
      const double twice = 2.0 * c.margin_curve[i].second;
      EXPECT_NEAR(sum.margin_curve[i].second + diff.margin_curve[i].second, twice, 1e-10 * std::max(1.0, std::abs(twice)));
    }
  }
}

TEST(AnalyticTest, EighthRootCombinationsAreReal) {
  std::mt19937_64 gen(71);
  for (int k = 0; k < 200; ++k) {
    const GaussPoly f = testing::random_mix(gen, Dim::One);
    for (const BoundReport& b : omega8_bounds(f, std::abs(mean_s(f)), kImag)) {
      EXPECT_LT(b.max_imag_residue, 1e-10);
      EXPECT_FALSE(b.numerical_error);
    }
  }
}

TEST(AnalyticTest, MulticomponentDegeneratesToTheCoshBound) {
  // w = 1 with a very wide kernel leaves psi_b = psi and an empty complement.
  const GaussPoly f = testing::eight_component_psi();
  const BoundReport one = multicomponent_bound(f, {1e4}, {1.0}, kImag);
  const BoundReport plain = cosh_bound(f, mean_s(f), kImag);
  ASSERT_EQ(one.margin_curve.size(), plain.margin_curve.size());
  for (std::size_t i = 0; i < plain.margin_curve.size(); ++i)
    EXPECT_NEAR(one.margin_curve[i].second, plain.margin_curve[i].second,
                1e-6 * std::max(1.0, std::abs(eval_imag(f, plain.margin_curve[i].first))));
  EXPECT_THROW(multicomponent_bound(f, {1.0, 2.0}, {0.6, 0.6}, kImag), std::invalid_argument);
  EXPECT_THROW(multicomponent_bound(f, {1.0}, {-0.1}, kImag), std::invalid_argument);
}

TEST(AnalyticProperty, SoundOnPositiveTransforms) {
  std::mt19937_64 gen(73);
  int positives = 0;
  for (Dim d : {Dim::One, Dim::Two})
    for (int k = 0; k < 3000 && positives < 80; ++k) {
      const GaussPoly f = testing::random_mix(gen, d);
      if (!is_nonneg(exact_transform(f)).nonneg) continue;
      ++positives;
      const double s = mean_s(f);
      ASSERT_GE(s, 0.0);
      if (d == Dim::Two) {
        EXPECT_FALSE(i0_bound(f, s, kImag).first_violation);
        continue;
      }
      const BoundReport c = cosh_bound(f, s, kImag);
      EXPECT_FALSE(c.first_violation);
      const auto [sum, diff] = cosh_cos_bounds(f, s, kImag);
      EXPECT_FALSE(sum.first_violation);
      EXPECT_FALSE(diff.first_violation);
      for (const BoundReport& b : omega8_bounds(f, s, kImag)) EXPECT_FALSE(b.first_violation) << to_string(b.id);
      const BoundReport m = multicomponent_bound(f, {1.0, 0.5}, {0.5, 0.5}, kImag);
      EXPECT_FALSE(m.first_violation);
      // The refinement is at least as tight as the single cosh.
      for (std::size_t i = 0; i < c.margin_curve.size(); ++i)
        EXPECT_LE(m.margin_curve[i].second, c.margin_curve[i].second + 1e-9 * std::max(1.0, eval_imag(f, c.margin_curve[i].first)));
      // psi(ir) is convex.
      for (std::size_t i = 1; i + 1 < 300; ++i) {
        const double h = 0.01;
        const double r = i * h;
        EXPECT_GE(eval_imag(f, r + h) - 2 * eval_imag(f, r) + eval_imag(f, r - h), -1e-9);
      }
    }
  EXPECT_GE(positives, 60);
}

TEST(AnalyticTest, SuiteNamesFollowTheDimension) {
  const AssociateSet s1 = build_associates(testing::eight_component_psi(), 1.0, 4);
  const TestVerdict v = analytic_suite(s1, kImag);
  EXPECT_EQ(v.criterion, "cosh");
  EXPECT_TRUE(v.detected);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->associate, "psi");
  const AssociateSet s2 = build_associates(GaussPoly(Dim::Two, 0.5, {1.0}), 1.0, 4);
  const TestVerdict v2 = analytic_suite(s2, kImag);
  EXPECT_EQ(v2.criterion, "I0");
  EXPECT_FALSE(v2.detected);
}

}  // namespace
}  // namespace bochner
