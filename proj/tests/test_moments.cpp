// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/moments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bochner/associates.hpp"
#include "bochner/experiments.hpp"
#include "test_util.hpp"

namespace bochner {
namespace {

const double kSqrtHalfPi = std::sqrt(std::numbers::pi / 2.0);

GaussPoly unit_gaussian(Dim d) { return basis_function(d, 0); }

// mu_q by direct quadrature of the transform: s^q phi(s) ds in 1D, k^{q+1} phi(k) dk in 2D.
double moment_on_phi(const GaussPoly& f, int q) {
  const GaussPoly phi = exact_transform(f);
  const double extra = f.dim() == Dim::Two ? 1.0 : 0.0;
  return testing::integrate([&](double s) { return std::pow(s, q + extra) * eval(phi, s); }, 0.0,
                            testing::reach(phi), 128);
}

TEST(MomentsTest, UnitGaussian1d) {
  const GaussPoly g = unit_gaussian(Dim::One);
  // Normalize so that psi(0) = 1: e^{-r^2/2}.
  const GaussPoly e = g.scaled(1.0 / g.at_origin());
  EXPECT_NEAR(mu1_r_space(e), 1.0, 1e-10);
  EXPECT_NEAR(mu1_closed_form(e), 1.0, 1e-12);
  EXPECT_NEAR(mu0(e), kSqrtHalfPi, 1e-14);
  const MomentReport m = moment_report(e);
  EXPECT_NEAR(m.mean_s, std::sqrt(2.0 / std::numbers::pi), 1e-10);
  EXPECT_FALSE(m.negative_mu1());
  EXPECT_EQ(m.method, MomentMethod::RSpaceFormula);
}

TEST(MomentsTest, UnitGaussian2d) {
  // int_0^inf k^2 e^{-k^2/2} dk = sqrt(pi/2), times sqrt 2 for the normalized basis function.
  const GaussPoly g = unit_gaussian(Dim::Two);
  EXPECT_NEAR(mu1_r_space(g), std::numbers::sqrt2 * kSqrtHalfPi, 1e-10);
  EXPECT_NEAR(mu0(g), std::numbers::sqrt2, 1e-14);
}

TEST(MomentsTest, EightComponentMeanMomentum) {
  const MomentReport m = moment_report(testing::eight_component_psi());
  EXPECT_NEAR(m.mean_s, 0.836263, 1e-4);
}

TEST(MomentsTest, SecondBasisFunctionHasNegativeFirstMoment) {
  // Its transform is minus itself.
  const GaussPoly xi2 = basis_function(Dim::One, 1);
  EXPECT_LT(mu1_closed_form(xi2), 0.0);
  EXPECT_LT(mu1_r_space(xi2), 0.0);
  EXPECT_TRUE(moment_report(xi2).negative_mu1());
}

TEST(MomentsTest, FirstMomentAgreesWithQuadratureOnTheTransform) {
  std::mt19937_64 gen(3);
  for (Dim d : {Dim::One, Dim::Two})
    for (int k = 0; k < 5; ++k) {
      const GaussPoly f = testing::random_mix(gen, d);
      const double oracle = moment_on_phi(f, 1);
      EXPECT_NEAR(mu1_r_space(f), oracle, 1e-8 * (1.0 + std::abs(oracle)));
      EXPECT_NEAR(mu1_closed_form(f), oracle, 1e-9 * (1.0 + std::abs(oracle)));
    }
}

TEST(MomentsTest, EvenMoments) {
  const GaussPoly e = unit_gaussian(Dim::One).scaled(1.0 / unit_gaussian(Dim::One).at_origin());
  EXPECT_NEAR(mu_even(e, 0), kSqrtHalfPi, 1e-14);
  EXPECT_NEAR(mu_even(e, 1), kSqrtHalfPi, 1e-14);
  std::mt19937_64 gen(4);
  for (Dim d : {Dim::One, Dim::Two})
    for (int k = 0; k < 3; ++k) {
      const GaussPoly f = testing::random_mix(gen, d);
      for (int q = 0; q <= 4; ++q) {
        const double oracle = moment_on_phi(f, 2 * q);
        EXPECT_NEAR(mu_even(f, q), oracle, 1e-10 * std::max(1.0, std::abs(oracle))) << to_int(d) << " q=" << q;
      }
    }
}

TEST(MomentsProperty, RSpaceFormulaMatchesClosedForm) {
  std::mt19937_64 gen(17);
  for (Dim d : {Dim::One, Dim::Two})
    for (int k = 0; k < 1000; ++k) {
      const GaussPoly f = testing::random_mix(gen, d);
      const double ref = mu1_closed_form(f);
      ASSERT_NEAR(mu1_r_space(f), ref, 1e-8 * (1.0 + std::abs(ref))) << to_int(d) << " draw " << k;
    }
}

TEST(MomentsProperty, PositiveTransformsHavePositiveMoments) {
  std::mt19937_64 gen(19);
  int positives = 0;
  for (Dim d : {Dim::One, Dim::Two})
    for (int k = 0; k < 3000; ++k) {
      const GaussPoly f = testing::random_mix(gen, d);
      if (!is_nonneg(exact_transform(f)).nonneg) continue;
      ++positives;
      EXPECT_GE(mu1_r_space(f), -1e-10);
      for (int q = 0; q <= 4; ++q) EXPECT_GT(mu_even(f, q), 0.0);
    }
  EXPECT_GT(positives, 20);
}

TEST(MomentsProperty, TwoDimensionalFormulaIsTheOneDimensionalIntegral) {
  // Same integrand, different prefactor.
  std::mt19937_64 gen(23);
  for (int k = 0; k < 3; ++k) {
    const std::vector<double> c = testing::random_unit(gen);
    const GaussPoly f1(Dim::One, 0.5, c), f2(Dim::Two, 0.5, c);
    EXPECT_NEAR(mu1_r_space(f2), kSqrtHalfPi * mu1_r_space(f1), 1e-10 * (1.0 + std::abs(mu1_r_space(f2))));
  }
}

TEST(MomentsTest, GaussSumMomentsAreAdditive) {
  const GaussPoly f = testing::eight_component_psi();
  const GaussPoly g = convolve_gauss(f, 1.0).scaled(-0.5);
  const GaussSum s({f, g});
  EXPECT_NEAR(mu1_r_space(s), mu1_closed_form(f) + mu1_closed_form(g), 1e-8);
  EXPECT_NEAR(mu0(s), mu0(f) + mu0(g), 1e-14);
}

TEST(MomentsTest, AssociatesOfUnitGaussianAllPositive) {
  const AssociateSet set = build_associates(unit_gaussian(Dim::One), 1.0, 4);
  const auto reports = mean_s_per_associate(set);
  ASSERT_EQ(reports.size(), 10u);
  for (const auto& r : reports) {
    ASSERT_TRUE(r.report) << r.tag << ": " << r.error;
    EXPECT_GT(r.report->mean_s, 0.0) << r.tag;
    EXPECT_FALSE(r.detected());
  }
  EXPECT_EQ(reports.front().tag, "psi");
  EXPECT_NEAR(reports.front().report->mean_s, std::sqrt(2.0 / std::numbers::pi), 1e-10);
}

}  // namespace
}  // namespace bochner
