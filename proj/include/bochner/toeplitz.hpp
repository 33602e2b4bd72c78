// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Matrix method: equidistant symmetric Toeplitz matrices T_n(r) with entries
// f(|i - j| r) must be positive semidefinite at every spacing r when the
// transform of f is nonnegative.

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bochner/associates.hpp"
#include "bochner/gauss_poly.hpp"
#include "bochner/verdict.hpp"

namespace bochner {

/// Ascending grid r_min, r_min + step, ..., r_max.
struct RGrid {
  double r_min = 0.025;
  double r_max = 3.5;
  double step = 0.025;

  std::vector<double> points() const;
  void validate() const;  // throws std::invalid_argument

  static RGrid toeplitz_default() { return {0.025, 3.5, 0.025}; }
  static RGrid imaginary_default() { return {0.0, 6.0, 0.01}; }
};

/// Dense symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  SymMatrix(int n, std::vector<double> row_major);

  int order() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double frobenius_norm() const;
  bool is_symmetric(double tol = 0.0) const;

 private:
  int n_;
  std::vector<double> a_;
};

SymMatrix toeplitz_matrix(const GaussPoly& f, int n, double r);

/// All eigenvalues, ascending, by cyclic Jacobi rotations. Throws
/// std::invalid_argument on non-symmetric input.
std::vector<double> jacobi_eigenvalues(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

/// Detection threshold: lambda_min < -1e-10 |f(0)|.
double toeplitz_epsilon(const GaussPoly& f);

struct ToeplitzScan {
  int order = 0;
  RGrid grid;
  std::vector<std::pair<double, double>> min_eig;  // (r, lambda_min)
  std::optional<double> first_violation;
  std::optional<double> det_small_r_exponent;
};

struct ToeplitzScanOptions {
  bool stop_at_first_violation = false;
  bool fit_det_exponent = false;
};

ToeplitzScan toeplitz_scan(const GaussPoly& f, int n, const RGrid& grid, ToeplitzScanOptions opts = {});

/// log det T_n(r) via LDL^T in extended precision.
long double toeplitz_log_det(const GaussPoly& f, int n, double r);

/// Least-squares slope of log det T_n against log r over the given points.
double det_log_log_slope(const GaussPoly& f, int n, std::span<const double> r_points);

/// Scan every associate; detected if any lambda_min goes negative. The
/// witness is the first (associate, r) in set order.
TestVerdict toeplitz_suite(const AssociateSet& set, int n, const RGrid& grid);

}  // namespace bochner
