// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bochner {

std::vector<double> RGrid::points() const {
  validate();
  std::vector<double> pts;
  const auto n = static_cast<long>(std::floor((r_max - r_min) / step + 1e-9));
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) pts.push_back(r_min + static_cast<double>(k) * step);
  return pts;
}

void RGrid::validate() const {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !std::isfinite(step))
    throw std::invalid_argument("r-grid bounds must be finite");
  if (!(step > 0.0)) throw std::invalid_argument("r-grid step must be positive");
  if (r_min < 0.0) throw std::invalid_argument("r-grid must start at r >= 0");
  if (r_max < r_min) throw std::invalid_argument("r-grid is empty (r_max < r_min)");
}

SymMatrix::SymMatrix(int n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {
  if (n <= 0 || a_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix data does not match order " + std::to_string(n));
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

bool SymMatrix::is_symmetric(double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

SymMatrix toeplitz_matrix(const GaussPoly& f, int n, double r) {
  if (n < 2) throw std::invalid_argument("Toeplitz order must be at least 2");
  if (!(r > 0.0)) throw std::invalid_argument("Toeplitz spacing must be positive");
  std::vector<double> diag(n);
  for (int k = 0; k < n; ++k) diag[k] = eval(f, k * r);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = diag[std::abs(i - j)];
  return m;
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("Jacobi eigensolver needs a symmetric matrix");
  SymMatrix a = input;
  const int n = a.order();
  const double target = 1e-13 * a.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 60 && off_norm() > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_eigenvalue(const SymMatrix& m) { return jacobi_eigenvalues(m).front(); }

double toeplitz_epsilon(const GaussPoly& f) { return 1e-10 * std::abs(f.at_origin()); }

ToeplitzScan toeplitz_scan(const GaussPoly& f, int n, const RGrid& grid, ToeplitzScanOptions opts) {
  if (n < 2) throw std::invalid_argument("Toeplitz order must be at least 2");
  const auto pts = grid.points();
  if (pts.empty() || !(pts.front() > 0.0)) throw std::invalid_argument("Toeplitz scan grid must be positive");

  ToeplitzScan scan;
  scan.order = n;
  scan.grid = grid;
  scan.min_eig.reserve(pts.size());
  const double eps = toeplitz_epsilon(f);
  for (double r : pts) {
    const double lam = min_eigenvalue(toeplitz_matrix(f, n, r));
    scan.min_eig.emplace_back(r, lam);
    if (lam < -eps && !scan.first_violation) {
      scan.first_violation = r;
      if (opts.stop_at_first_violation) break;
    }
  }
  if (opts.fit_det_exponent && pts.size() >= 5) {
    scan.det_small_r_exponent = det_log_log_slope(f, n, std::span(pts).first(5));
  }
  return scan;
}

long double toeplitz_log_det(const GaussPoly& f, int n, double r) {
  std::vector<long double> diag(n);
  for (int k = 0; k < n; ++k) diag[k] = eval_extended(f, static_cast<long double>(k) * r);
  // LDL^T on the Toeplitz matrix; log det = sum log d_k.
  std::vector<long double> l(static_cast<std::size_t>(n) * n, 0.0L);
  std::vector<long double> d(n, 0.0L);
  long double log_det = 0.0L;
  for (int j = 0; j < n; ++j) {
    long double dj = diag[0];
    for (int k = 0; k < j; ++k) dj -= l[j * n + k] * l[j * n + k] * d[k];
    if (!(dj > 0.0L)) return std::numeric_limits<long double>::quiet_NaN();
    d[j] = dj;
    log_det += std::log(dj);
    for (int i = j + 1; i < n; ++i) {
      long double v = diag[i - j];
      for (int k = 0; k < j; ++k) v -= l[i * n + k] * l[j * n + k] * d[k];
      l[i * n + j] = v / dj;
    }
  }
  return log_det;
}

double det_log_log_slope(const GaussPoly& f, int n, std::span<const double> r_points) {
  if (r_points.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(r_points.size());
  for (double r : r_points) {
    const double x = std::log(r);
    const double y = static_cast<double>(toeplitz_log_det(f, n, r));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

TestVerdict toeplitz_suite(const AssociateSet& set, int n, const RGrid& grid) {
  TestVerdict v;
  v.criterion = "toeplitz" + std::to_string(n);
  for (const auto& e : set.entries) {
    const ToeplitzScan scan = toeplitz_scan(e.f, n, grid, {.stop_at_first_violation = true});
    v.cost += scan.min_eig.size() * static_cast<std::size_t>(n);
    if (scan.first_violation && !v.detected) {
      v.detected = true;
      v.witness = Witness{e.tag.label(), *scan.first_violation, scan.min_eig.back().second};
      break;
    }
  }
  return v;
}

}  // namespace bochner
