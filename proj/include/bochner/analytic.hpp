// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Analyticity method. With P(s) the normalized transform, psi(ir) = psi(0) <cosh(s r)>
// in 1D and psi(ix) = psi(0) <I0(k x)> in 2D; Jensen's inequality for these
// convex kernels gives lower bounds that only need psi and its mean momentum.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bochner/associates.hpp"
#include "bochner/gauss_poly.hpp"
#include "bochner/toeplitz.hpp"
#include "bochner/verdict.hpp"

namespace bochner {

enum class BoundId { Cosh, I0, Sum4, Diff4, Omega8_1, Omega8_2, Omega8_3, Omega8_4, Multicomponent };

std::string to_string(BoundId id);

/// Relative violation tolerance applied to max(1, |lhs|).
inline constexpr double kBoundRelTolerance = 1e-9;

struct BoundReport {
  BoundId id = BoundId::Cosh;
  std::vector<std::pair<double, double>> margin_curve;  // (r, lhs - rhs), oriented so >= 0 holds
  std::optional<double> first_violation;
  double first_violation_margin = 0.0;
  std::vector<double> mean_s_used;
  bool negative_mean = false;     // some mean momentum used was negative
  bool numerical_error = false;   // a combination meant to be real was not
  double max_imag_residue = 0.0;  // omega8 only
};

struct BoundOptions {
  bool keep_curve = true;
  bool stop_at_first_violation = false;
};

/// psi(ir) >= psi(0) cosh(<s> r). 1D only.
BoundReport cosh_bound(const GaussPoly& f, double mean_s, const RGrid& grid, BoundOptions opts = {});

/// psi(ix) >= psi(0) I0(<k> x). 2D only.
BoundReport i0_bound(const GaussPoly& f, double mean_k, const RGrid& grid, BoundOptions opts = {});

/// psi(r) + psi(ir) >= psi(0) [cos(sr) + cosh(sr)] and
/// psi(r) - psi(ir) <= psi(0) [cos(sr) - cosh(sr)], s = <s>.
std::pair<BoundReport, BoundReport> cosh_cos_bounds(const GaussPoly& f, double mean_s, const RGrid& grid,
                                                    BoundOptions opts = {});

/// The four real combinations of psi on the rays {1, w, i, w i}, w = e^{i pi/4}:
/// two convex (lower bounds) and two concave (upper bounds).
std::array<BoundReport, 4> omega8_bounds(const GaussPoly& f, double mean_s, const RGrid& grid,
                                         BoundOptions opts = {});

/// psi(ir) >= sum_i w_i psi_{b_i}(0) cosh(<s>_{b_i} r) + psi_c(0) cosh(<s>_c r),
/// psi_c = psi - sum_i w_i psi_{b_i}. Weights positive with sum <= 1. 1D only.
BoundReport multicomponent_bound(const GaussPoly& f, const std::vector<double>& widths,
                                 const std::vector<double>& weights, const RGrid& grid, BoundOptions opts = {});

/// cosh (1D) or I0 (2D) bound on every associate, with <s> from the r-space
/// first-moment formula; OR-combined, witness = first (associate, r).
TestVerdict analytic_suite(const AssociateSet& set, const RGrid& grid);

}  // namespace bochner
