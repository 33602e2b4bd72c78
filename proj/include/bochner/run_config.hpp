// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// A run is fully described by its RunConfig. The resolved configuration
// (every default filled in) is written into summary.json and can be fed back
// to replay the run.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bochner {

enum class Command { Analyze, Grid3, Random1d, Random2d, Fig1 };

std::string to_string(Command c);
Command command_from_string(const std::string& s);  // throws std::invalid_argument

struct RunConfig {
  Command command = Command::Analyze;
  int dim = 1;

  // analyze: either basis coefficients or a raw polynomial in r^2 with width a.
  std::vector<double> coeffs;
  bool normalized = false;
  std::optional<double> width;
  std::vector<double> poly;
  std::vector<std::string> criteria;  // empty: every criterion for the dimension
  bool early_exit = false;
  int qmax = 4;

  std::vector<int> orders;       // Toeplitz orders
  std::vector<double> b;         // analyze/random1d: first entry; grid3: full list
  std::vector<double> b_sweep;   // random1d
  std::vector<double> multi_widths;
  std::vector<double> multi_weights;

  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;  // phi-negative target for random campaigns

  double rmin = 0.025, rmax = 3.5, rstep = 0.025;          // Toeplitz grid
  double imag_rmax = 6.0, imag_rstep = 0.01;               // imaginary-axis grid
  double alpha_offset = 0.5, beta_offset = 0.5;            // grid3 cell offsets

  std::string out = "out";

  /// Fills command-specific defaults in place and validates; throws
  /// std::invalid_argument with a precise message.
  void resolve();
};

RunConfig run_config_from_json(const nlohmann::json& j);  // unknown keys rejected
nlohmann::json to_json(const RunConfig& c);

/// Executes the run, writes artifacts under c.out and returns the summary
/// {config, stats, per_criterion, timings}. std::invalid_argument signals a
/// configuration error; other exceptions are numerical or I/O failures.
nlohmann::json run(RunConfig c);

}  // namespace bochner
