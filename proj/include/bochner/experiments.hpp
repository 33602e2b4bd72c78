// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Detection campaigns over populations of basis mixes. Ground truth comes from
// the exact transform; detections come from the criterion suites only.
//
// Populations are processed in parallel but folded in index order, so every
// table is bit-identical for a given configuration regardless of thread count.
// BOCHNER_THREADS overrides the worker count.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bochner/criteria.hpp"
#include "bochner/gauss_poly.hpp"
#include "bochner/moments.hpp"
#include "bochner/toeplitz.hpp"
#include "bochner/verdict.hpp"

namespace bochner {

struct CensusRow {
  std::size_t index = 0;             // draw index (random) or grid cell (grid3)
  std::vector<double> coeffs;        // basis coefficients c0..c4
  bool ground_truth_positive = false;
  std::vector<TestVerdict> verdicts;  // aligned with ExperimentStats::columns
};

struct ExperimentStats {
  std::string campaign;
  Dim dim = Dim::One;
  std::size_t draws = 0;          // candidates generated
  std::size_t population = 0;     // candidates kept by the psi screen
  std::size_t both_positive = 0;
  std::size_t phi_negative = 0;
  std::size_t rebels = 0;         // campaign-specific, see README
  std::vector<std::string> columns;
  std::vector<CensusRow> rows;
  /// Per-column and per-combination counts over phi-negative rows.
  std::map<std::string, std::size_t> detections;
  /// Per-column counts over ground-truth-positive rows. Must all be zero.
  std::map<std::string, std::size_t> false_detections;

  std::size_t column_index(const std::string& name) const;  // throws std::out_of_range
  /// Rows (phi-negative only) detected by at least one of the named columns.
  std::size_t union_count(const std::vector<std::string>& names) const;
  std::size_t total_false_detections() const;
  double rate(const std::string& key) const;  // detections[key] / phi_negative
};

/// Grid over the three-state sphere: c0 = cos a, c2 = sin a cos b, c4 = sin a sin b,
/// a = (i + alpha_offset) pi/90 for i < 45, b = (j + beta_offset) pi/45 for j < 90.
struct Grid3Config {
  int alpha_steps = 45;
  int beta_steps = 90;
  double alpha_offset = 0.5;
  double beta_offset = 0.5;
  std::vector<double> b_list{2.0, 1.0, 0.5};
  RGrid imaginary_grid = RGrid::imaginary_default();
};

ExperimentStats grid_census_3param(const Grid3Config& cfg);

struct Random1dConfig {
  std::size_t target_negative = 22000;  // stop after this many phi-negative functions
  std::uint64_t seed = 1;
  double b = 1.0;
  std::vector<double> b_sweep{0.2, 0.5, 1.0, 2.0, 5.0};
  RGrid toeplitz_grid = RGrid::toeplitz_default();
  RGrid imaginary_grid = RGrid::imaginary_default();
  std::vector<double> multi_widths{1.0, 0.5};
  std::vector<double> multi_weights{0.5, 0.5};
  std::size_t max_draws = 10'000'000;
};

ExperimentStats random_census_1d(const Random1dConfig& cfg);

struct Random2dConfig {
  std::size_t target_negative = 10127;
  std::uint64_t seed = 2;
  std::vector<int> orders{5, 8, 9, 10};
  RGrid toeplitz_grid = RGrid::toeplitz_default();
  RGrid imaginary_grid = RGrid::imaginary_default();
  std::size_t max_draws = 10'000'000;
};

struct Random2dResult {
  ExperimentStats two_d;
  ExperimentStats one_d;  // same screening, 1D basis, cosh in place of I0
};

Random2dResult random_census_2d(const Random2dConfig& cfg);

/// Unit-norm 5-vector for draw `index`: normalized independent Gaussian
/// deviates from a generator seeded by (seed, index).
std::vector<double> sphere_sample(std::uint64_t seed, std::size_t index, std::size_t dimension = 5);

struct Figure1Report {
  GaussPoly psi;
  GaussPoly phi;
  NonnegResult phi_sign;
  MomentReport moments;
  std::vector<std::pair<double, double>> cosh_margin;  // (r, psi(ir) - psi(0) cosh(<s> r))
  std::optional<double> cosh_first_violation;
  ToeplitzScan order3;
  ToeplitzScan order4;
};

/// The eight-component example: psi = e^{-r^2/2}(0.718081 - 0.064879 r^2 - ...).
GaussPoly figure1_psi();

Figure1Report figure1_case(const RGrid& toeplitz_grid = RGrid::toeplitz_default(),
                           const RGrid& imaginary_grid = RGrid::imaginary_default());

/// Worker count: BOCHNER_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

}  // namespace bochner
