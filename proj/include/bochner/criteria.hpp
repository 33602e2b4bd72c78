// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// The necessary-condition checklist as composable criteria with a uniform
// verdict. Every criterion runs over an AssociateSet; a detection on any
// associate rules out a nonnegative transform of the base function.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bochner/associates.hpp"
#include "bochner/gauss_poly.hpp"
#include "bochner/toeplitz.hpp"
#include "bochner/verdict.hpp"

namespace bochner {

/// Listed in execution (cost) order.
enum class CriterionKind {
  Maximality,
  EvenMoments,
  OddMomentSign,
  Toeplitz,
  Cosh,
  I0,
  CoshCos,
  Omega8,
  Multicomponent,
};

struct CriterionId {
  CriterionKind kind = CriterionKind::Maximality;
  int order = 0;  // Toeplitz only

  /// "maximality", "even_moments", "odd_moment_sign", "toeplitz5", "cosh", "I0",
  /// "cosh_cos", "omega8", "multicomponent".
  std::string name() const;
  /// Inverse of name(); also accepts "toeplitz(5)". Throws std::invalid_argument.
  static CriterionId parse(const std::string& s);

  friend bool operator==(const CriterionId&, const CriterionId&) = default;
  friend bool operator<(const CriterionId& a, const CriterionId& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.order < b.order;
  }
};

/// Criteria that only exist in one dimension.
bool criterion_supports(const CriterionId& id, Dim dim);

struct ChecklistParams {
  std::optional<double> b = 1.0;
  int qmax = 4;
  RGrid toeplitz_grid = RGrid::toeplitz_default();
  RGrid imaginary_grid = RGrid::imaginary_default();
  std::optional<RGrid> maximality_grid;  // empty: adaptive per function
  std::vector<double> multi_widths{1.0, 0.5};
  std::vector<double> multi_weights{0.5, 0.5};
  bool early_exit = false;

  void validate() const;  // throws std::invalid_argument
};

/// Grid used by maximality_test when none is given: step 0.01 out to
/// max(10, sqrt(40 / a)), far enough that the Gaussian factor is below e^-40.
RGrid adaptive_maximality_grid(const GaussPoly& f);

/// Detected if f(0) <= 0 (f nonzero) or f(r) > f(0) + 1e-12 |f(0)| somewhere;
/// the worst grid point is refined by golden-section search.
TestVerdict maximality_test(const GaussPoly& f, const std::optional<RGrid>& grid = std::nullopt);

TestVerdict maximality_suite(const AssociateSet& set, const std::optional<RGrid>& grid = std::nullopt);

/// mu_{2q} = psi_{2q}(0) must be positive for every associate.
TestVerdict even_moments_suite(const AssociateSet& set);

/// mu_1 from the r-space formula must be nonnegative for every associate.
TestVerdict odd_moment_suite(const AssociateSet& set);

/// Both cosh +/- cos bounds on every associate (1D).
TestVerdict cosh_cos_suite(const AssociateSet& set, const RGrid& grid);

/// The four eighth-root combinations on every associate (1D).
TestVerdict omega8_suite(const AssociateSet& set, const RGrid& grid);

/// Multi-component cosh bound on the base function (1D).
TestVerdict multicomponent_suite(const AssociateSet& set, const ChecklistParams& params);

TestVerdict run_criterion(const CriterionId& id, const AssociateSet& set, const ChecklistParams& params);

/// Runs the selection in cost order (duplicates dropped) and returns one
/// verdict per criterion in that order. With early_exit the list stops after
/// the first detection.
std::vector<TestVerdict> run_checklist(const AssociateSet& set, std::vector<CriterionId> selection,
                                       const ChecklistParams& params);

/// Builds build_associates(f, params.b, params.qmax) first.
std::vector<TestVerdict> run_checklist(const GaussPoly& f, std::vector<CriterionId> selection,
                                       const ChecklistParams& params);

/// Every criterion applicable to the dimension, Toeplitz at the given orders.
std::vector<CriterionId> full_selection(Dim dim, const std::vector<int>& toeplitz_orders);

}  // namespace bochner
