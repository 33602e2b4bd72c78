// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Moments of the transform phi, computed from psi alone.
//
// Normalizations: in 1D mu_q = int_0^inf s^q phi(s) ds and mu_0 = sqrt(pi/2) psi(0);
// in 2D mu_q = int_0^inf k dk k^q phi(k) and mu_0 = psi(0).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bochner/associates.hpp"
#include "bochner/gauss_poly.hpp"

namespace bochner {

enum class MomentMethod { RSpaceFormula, ClosedForm, QuadratureOnPhi };

std::string to_string(MomentMethod m);

struct MomentReport {
  double mu0 = 0.0;
  double mu1 = 0.0;
  double mean_s = 0.0;  // mu1 / mu0
  MomentMethod method = MomentMethod::RSpaceFormula;

  bool negative_mu1() const { return mu1 < 0.0; }
};

/// First odd moment from psi only:
///   1D: sqrt(2/pi) int_0^inf dr/r^2 [psi(0) - psi(r)]
///   2D:            int_0^inf dx/x^2 [psi(0) - psi(x)]
double mu1_r_space(const GaussPoly& f);
double mu1_r_space(const GaussSum& f);

/// Same moment, summed term by term over the exact transform. Oracle for mu1_r_space.
double mu1_closed_form(const GaussPoly& f);

/// Zeroth moment of phi in the dimension's normalization.
double mu0(const GaussPoly& f);
double mu0(const GaussSum& f);

/// mu_{2q} = psi_{2q}(0), times sqrt(pi/2) in 1D.
double mu_even(const GaussPoly& f, int q);

MomentReport moment_report(const GaussPoly& f);
MomentReport moment_report(const GaussSum& f);
MomentReport moment_report_closed_form(const GaussPoly& f);

struct AssociateMoments {
  std::string tag;
  std::optional<MomentReport> report;  // empty when the quadrature failed
  std::string error;
  bool detected() const { return report && report->negative_mu1(); }
};

/// <s> for every associate; a failure in one entry does not abort the others.
std::vector<AssociateMoments> mean_s_per_associate(const AssociateSet& set);

}  // namespace bochner
