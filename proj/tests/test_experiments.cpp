// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bochner/report.hpp"
#include "test_util.hpp"

namespace bochner {
namespace {

class ThreadOverride {
 public:
  explicit ThreadOverride(const char* n) { setenv("BOCHNER_THREADS", n, 1); }
  ~ThreadOverride() { unsetenv("BOCHNER_THREADS"); }
};

std::string census_text(const ExperimentStats& s) {
  std::ostringstream os;
  write_census_csv(os, s);
  return os.str();
}

Grid3Config small_grid() {
  Grid3Config g;
  g.alpha_steps = 9;
  g.beta_steps = 18;
  return g;
}

TEST(SphereSampleTest, DeterministicUnitVectors) {
  const auto a = sphere_sample(1, 0);
  EXPECT_EQ(a, sphere_sample(1, 0));
  EXPECT_NE(a, sphere_sample(1, 1));
  EXPECT_NE(a, sphere_sample(2, 0));
  for (std::size_t i = 0; i < 100; ++i) {
    double n2 = 0.0;
    for (double x : sphere_sample(7, i)) n2 += x * x;
    EXPECT_NEAR(n2, 1.0, 1e-15);
  }
  EXPECT_EQ(sphere_sample(1, 3, 3).size(), 3u);
}

TEST(SphereSampleTest, CoordinatesAreSymmetric) {
  double mean = 0.0, second = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = sphere_sample(11, i)[2];
    mean += x;
    second += x * x;
  }
  EXPECT_NEAR(mean / n, 0.0, 0.02);
  EXPECT_NEAR(second / n, 0.2, 0.01);
}

TEST(WorkerCountTest, EnvironmentOverride) {
  {
    ThreadOverride t("3");
    EXPECT_EQ(worker_count(), 3u);
  }
  {
    ThreadOverride t("zero");
    EXPECT_GE(worker_count(), 1u);
  }
}

TEST(Grid3Test, SmallCensusIsConsistent) {
  const ExperimentStats s = grid_census_3param(small_grid());
  EXPECT_EQ(s.draws, 9u * 18u);
  EXPECT_EQ(s.population, s.rows.size());
  EXPECT_EQ(s.population, s.both_positive + s.phi_negative);
  EXPECT_EQ(s.total_false_detections(), 0u);
  EXPECT_EQ(s.columns.front(), "max_psi_psi2");
  EXPECT_EQ(s.columns.size(), 1u + 3u * 3u);
  for (const auto& row : s.rows) {
    ASSERT_EQ(row.verdicts.size(), s.columns.size());
    ASSERT_EQ(row.coeffs.size(), 5u);
    EXPECT_EQ(row.coeffs[3], 0.0);
    EXPECT_EQ(row.coeffs[4], 0.0);
    EXPECT_EQ(row.ground_truth_positive,
              is_nonneg(exact_transform(mix({Dim::One, {row.coeffs[0], row.coeffs[1], row.coeffs[2]}, false}))).nonneg);
    for (const auto& v : row.verdicts) EXPECT_EQ(v.detected, v.witness.has_value());
  }
  EXPECT_EQ(s.rebels, s.phi_negative - s.detections.at("max_psi_psi2"));
  EXPECT_LE(s.detections.at("rebels:any"), s.rebels);
}

TEST(Grid3Test, ThreadCountDoesNotChangeTheTables) {
  std::string one, many;
  {
    ThreadOverride t("1");
    one = census_text(grid_census_3param(small_grid()));
  }
  {
    ThreadOverride t("4");
    many = census_text(grid_census_3param(small_grid()));
  }
  EXPECT_EQ(one, many);
}

TEST(Random1dTest, SmallCampaign) {
  Random1dConfig cfg;
  cfg.target_negative = 25;
  cfg.b_sweep = {0.5, 2.0};
  const ExperimentStats s = random_census_1d(cfg);
  EXPECT_EQ(s.phi_negative, 25u);
  EXPECT_EQ(s.population, s.rows.size());
  EXPECT_GE(s.draws, s.population);
  EXPECT_EQ(s.total_false_detections(), 0u);
  // Subsets of associates cannot detect more than their supersets.
  EXPECT_LE(s.detections.at("toeplitz5_psi"), s.detections.at("toeplitz5_psi_psi2"));
  EXPECT_LE(s.detections.at("toeplitz5_psi_psi2"), s.detections.at("toeplitz5_psi_psi2_psib_psib2"));
  EXPECT_LE(s.detections.at("toeplitz5_psi_psi2_psib_psib2"), s.detections.at("toeplitz5_all10"));
  EXPECT_LE(s.detections.at("cosh_psi"), s.detections.at("cosh_all10"));
  // Union identity.
  EXPECT_EQ(s.detections.at("union_toeplitz3_cosh"),
            s.detections.at("toeplitz3_all10") + s.detections.at("cosh_after_toeplitz3"));
  EXPECT_EQ(s.detections.at("union_toeplitz3_cosh"),
            s.detections.at("cosh_all10") + s.detections.at("toeplitz3_after_cosh"));
  EXPECT_EQ(s.rebels, s.phi_negative - s.detections.at("union_toeplitz3_cosh"));
  EXPECT_TRUE(s.detections.count("toeplitz3_all10@b=0.5"));
  // Every draw is reproducible from its index.
  for (const auto& row : s.rows) EXPECT_EQ(row.coeffs, sphere_sample(cfg.seed, row.index));
}

TEST(Random1dTest, ThreadCountDoesNotChangeTheTables) {
  Random1dConfig cfg;
  cfg.target_negative = 10;
  cfg.seed = 5;
  std::string one, many;
  {
    ThreadOverride t("1");
    one = census_text(random_census_1d(cfg));
  }
  {
    ThreadOverride t("3");
    many = census_text(random_census_1d(cfg));
  }
  EXPECT_EQ(one, many);
}

TEST(Random2dTest, SmallCampaign) {
  Random2dConfig cfg;
  cfg.target_negative = 20;
  const Random2dResult r = random_census_2d(cfg);
  EXPECT_EQ(r.two_d.phi_negative, 20u);
  EXPECT_EQ(r.two_d.dim, Dim::Two);
  EXPECT_EQ(r.one_d.dim, Dim::One);
  EXPECT_EQ(r.two_d.total_false_detections(), 0u);
  EXPECT_EQ(r.one_d.total_false_detections(), 0u);
  // Both campaigns walk the same draw stream to the same target.
  EXPECT_EQ(r.one_d.phi_negative, 20u);
  for (const auto& row : r.one_d.rows) EXPECT_EQ(row.coeffs, sphere_sample(cfg.seed, row.index));
  EXPECT_TRUE(r.two_d.detections.count("I0_psi"));
  EXPECT_TRUE(r.one_d.detections.count("cosh_psi"));
  for (int n : cfg.orders) EXPECT_TRUE(r.two_d.detections.count("toeplitz" + std::to_string(n) + "_psi"));
  EXPECT_LE(r.two_d.detections.at("toeplitz5_psi"), r.two_d.detections.at("toeplitz10_psi"));
}

TEST(Figure1Test, EightComponentExample) {
  const Figure1Report rep = figure1_case();
  EXPECT_FALSE(rep.phi_sign.nonneg);
  EXPECT_NEAR(rep.moments.mean_s, 0.836263, 1e-4);
  EXPECT_TRUE(rep.cosh_first_violation);
  EXPECT_FALSE(rep.order3.first_violation);
  EXPECT_TRUE(rep.order4.first_violation);
  EXPECT_LT(testing::coeff_distance(rep.phi, testing::eight_component_phi()), 1e-5);
}

}  // namespace
}  // namespace bochner
