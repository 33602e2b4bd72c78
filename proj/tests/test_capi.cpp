// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library through its C header only.

#include "bochner/bochner.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct FuncDeleter {
  void operator()(bochner_func* f) const { bochner_func_free(f); }
};
using Func = std::unique_ptr<bochner_func, FuncDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  bochner_string_free(s);
  return out;
}

Func eight_component() {
  const double p[] = {0.718081, -0.064879, -0.0685793, 0.0269736, 0.00119983};
  bochner_func* f = nullptr;
  EXPECT_EQ(bochner_func_from_poly(1, 0.5, p, 5, &f), BOCHNER_OK);
  return Func(f);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("bochner_capi_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(CApiTest, HandlesRoundTrip) {
  EXPECT_STREQ(bochner_version(), "1.0.0");
  const double c[] = {1.0, 0.0, 0.0};
  bochner_func* raw = nullptr;
  ASSERT_EQ(bochner_func_from_basis(1, c, 3, 1, &raw), BOCHNER_OK);
  Func f(raw);
  int dim = 0;
  double width = 0.0, p[8];
  size_t n = 0;
  ASSERT_EQ(bochner_func_get(f.get(), &dim, &width, p, 8, &n), BOCHNER_OK);
  EXPECT_EQ(dim, 1);
  EXPECT_EQ(width, 0.5);
  ASSERT_EQ(n, 1u);
  EXPECT_NEAR(p[0], std::pow(M_PI, -0.25), 1e-15);

  double v = 0.0;
  ASSERT_EQ(bochner_func_eval(f.get(), 1.0, &v), BOCHNER_OK);
  EXPECT_NEAR(v, std::pow(M_PI, -0.25) * std::exp(-0.5), 1e-15);
  ASSERT_EQ(bochner_func_eval_imag(f.get(), 1.0, &v), BOCHNER_OK);
  EXPECT_NEAR(v, std::pow(M_PI, -0.25) * std::exp(0.5), 1e-14);

  bochner_func* t = nullptr;
  ASSERT_EQ(bochner_func_transform(f.get(), &t), BOCHNER_OK);
  Func phi(t);
  ASSERT_EQ(bochner_func_get(phi.get(), nullptr, &width, p, 8, &n), BOCHNER_OK);
  EXPECT_NEAR(p[0], std::pow(M_PI, -0.25), 1e-15);

  int nonneg = -1;
  double witness = 0.0;
  ASSERT_EQ(bochner_func_is_nonneg(phi.get(), &nonneg, &witness), BOCHNER_OK);
  EXPECT_EQ(nonneg, 1);
  EXPECT_EQ(witness, -1.0);
}

TEST(CApiTest, EightComponentExample) {
  Func f = eight_component();
  bochner_func* t = nullptr;
  ASSERT_EQ(bochner_func_transform(f.get(), &t), BOCHNER_OK);
  Func phi(t);
  int nonneg = -1;
  double witness = 0.0;
  ASSERT_EQ(bochner_func_is_nonneg(phi.get(), &nonneg, &witness), BOCHNER_OK);
  EXPECT_EQ(nonneg, 0);
  EXPECT_GT(witness, 0.0);
  double mu1 = 0.0, mean = 0.0;
  ASSERT_EQ(bochner_func_mean_s(f.get(), &mu1, &mean), BOCHNER_OK);
  EXPECT_NEAR(mean, 0.836263, 1e-4);

  char* out = nullptr;
  ASSERT_EQ(bochner_analyze(f.get(), R"js({"criteria": ["toeplitz3", "toeplitz(4)", "cosh"], "b": 1.0})js", &out),
            BOCHNER_OK);
  const auto j = nlohmann::json::parse(take(out));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["criterion"], "toeplitz3");
  EXPECT_EQ(j[1]["criterion"], "toeplitz4");
  EXPECT_EQ(j[2]["criterion"], "cosh");
  EXPECT_EQ(j[2]["detected"], true);
}

TEST(CApiTest, ErrorCodes) {
  bochner_func* f = nullptr;
  const double p[] = {1.0};
  EXPECT_EQ(bochner_func_from_poly(3, 0.5, p, 1, &f), BOCHNER_INVALID_ARGUMENT);
  EXPECT_NE(std::string(bochner_last_error()), "");
  EXPECT_EQ(bochner_func_from_poly(1, -1.0, p, 1, &f), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(bochner_func_from_poly(1, 0.5, nullptr, 1, &f), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(bochner_func_from_basis(1, p, 1, 0, nullptr), BOCHNER_INVALID_ARGUMENT);
  const double zeros[] = {0.0, 0.0};
  EXPECT_EQ(bochner_func_from_basis(1, zeros, 2, 1, &f), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(f, nullptr);

  double v = 0.0;
  EXPECT_EQ(bochner_func_eval(nullptr, 1.0, &v), BOCHNER_INVALID_ARGUMENT);
  Func g = eight_component();
  EXPECT_EQ(bochner_func_eval(g.get(), 1.0, &v), BOCHNER_OK);
  EXPECT_STREQ(bochner_last_error(), "");
  EXPECT_EQ(bochner_func_eval_imag(g.get(), -1.0, &v), BOCHNER_INVALID_ARGUMENT);

  char* out = nullptr;
  EXPECT_EQ(bochner_analyze(g.get(), R"({"colour": 1})", &out), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(bochner_analyze(g.get(), "{not json", &out), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(bochner_analyze(g.get(), R"({"criteria": ["I0"]})", &out), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(bochner_run(R"({"command": "grid4"})", &out), BOCHNER_INVALID_ARGUMENT);
  EXPECT_EQ(bochner_run(R"({"command": "random1d", "coeffs": [1]})", &out), BOCHNER_INVALID_ARGUMENT);
  bochner_func_free(nullptr);
  bochner_string_free(nullptr);
}

TEST(CApiTest, UnwritableOutputIsAnIoError) {
  char* out = nullptr;
  EXPECT_EQ(bochner_run(R"({"command": "fig1", "out": "/proc/bochner_no_such_dir/x"})", &out), BOCHNER_IO_ERROR);
}

TEST(CApiTest, RunWritesArtifactsAndReplays) {
  const auto dir = scratch("fig1");
  const std::string cfg = nlohmann::json{{"command", "fig1"}, {"out", dir.string()}}.dump();
  char* out = nullptr;
  ASSERT_EQ(bochner_run(cfg.c_str(), &out), BOCHNER_OK) << bochner_last_error();
  const auto summary = nlohmann::json::parse(take(out));
  for (const char* key : {"config", "stats", "per_criterion", "timings"}) EXPECT_TRUE(summary.contains(key)) << key;
  EXPECT_TRUE(std::filesystem::exists(dir / "summary.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "fig1_cosh_margin.csv"));

  // The resolved configuration reproduces the run.
  ASSERT_EQ(bochner_run(summary["config"].dump().c_str(), &out), BOCHNER_OK);
  const auto again = nlohmann::json::parse(take(out));
  EXPECT_EQ(again["stats"], summary["stats"]);
  EXPECT_EQ(again["per_criterion"], summary["per_criterion"]);
  std::filesystem::remove_all(dir);
}

TEST(CApiTest, SmallCampaignRun) {
  const auto dir = scratch("random1d");
  const std::string cfg =
      nlohmann::json{{"command", "random1d"}, {"n", 5}, {"seed", 3}, {"b_sweep", {1.0}}, {"out", dir.string()}}.dump();
  char* out = nullptr;
  ASSERT_EQ(bochner_run(cfg.c_str(), &out), BOCHNER_OK) << bochner_last_error();
  const auto summary = nlohmann::json::parse(take(out));
  EXPECT_EQ(summary["stats"]["phi_negative"], 5);
  EXPECT_TRUE(std::filesystem::exists(dir / "census.csv"));
  std::filesystem::remove_all(dir);
}

}  // namespace
