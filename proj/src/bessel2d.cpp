// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/bessel2d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bochner {

namespace {

constexpr double kSeriesLimit = 15.0;

// sum_k sign^k (x^2/4)^k / (k!)^2
long double power_series(double x, int sign) {
  const long double y = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= sign * y / (static_cast<long double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-21L * std::abs(sum)) break;
  }
  return sum;
}

// Coefficients of the large-argument expansion for order zero:
// a_k = prod_{j<=k} (2j-1)^2 / (k! 8^k), so that
//   I0(x) ~ e^x / sqrt(2 pi x) * sum_k a_k / x^k
//   J0(x) ~ sqrt(2/(pi x)) * (P cos(x - pi/4) - Q sin(x - pi/4))
// with P = sum_k (-1)^k a_{2k} / x^{2k}, Q = sum_k (-1)^{k+1} a_{2k+1} / x^{2k+1}.
// Summation stops at the smallest term.
struct Asymptotic {
  long double p = 0.0L, q = 0.0L, i_sum = 0.0L;
};

Asymptotic asymptotic_sums(double x) {
  Asymptotic s;
  long double term = 1.0L;  // a_k / x^k
  long double prev = std::numeric_limits<long double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      const long double odd = 2.0L * k - 1.0L;
      term *= odd * odd / (8.0L * k * x);
    }
    if (term > prev) break;
    prev = term;
    s.i_sum += term;
    switch (k % 4) {
      case 0: s.p += term; break;
      case 1: s.q -= term; break;
      case 2: s.p -= term; break;
      case 3: s.q += term; break;
    }
    if (term < 1e-20L) break;
  }
  return s;
}

}  // namespace

BesselEval eval_j0(double x) {
  const double ax = std::abs(x);
  if (ax < kSeriesLimit)
    return {BesselKind::J0, x, static_cast<double>(power_series(ax, -1)), BesselMethod::Series};
  const Asymptotic s = asymptotic_sums(ax);
  const long double w = ax - std::numbers::pi_v<long double> / 4.0L;
  const long double v = std::sqrt(2.0L / (std::numbers::pi_v<long double> * ax)) *
                        (s.p * std::cos(w) - s.q * std::sin(w));
  return {BesselKind::J0, x, static_cast<double>(v), BesselMethod::Asymptotic};
}

double log_bessel_i0(double x) {
  const double ax = std::abs(x);
  if (ax < kSeriesLimit) return static_cast<double>(std::log(power_series(ax, +1)));
  const Asymptotic s = asymptotic_sums(ax);
  return static_cast<double>(ax - 0.5L * std::log(2.0L * std::numbers::pi_v<long double> * ax) + std::log(s.i_sum));
}

BesselEval eval_i0(double x) {
  const double ax = std::abs(x);
  if (ax < kSeriesLimit)
    return {BesselKind::I0, x, static_cast<double>(power_series(ax, +1)), BesselMethod::Series};
  const double log_v = log_bessel_i0(ax);
  const double v = log_v > std::log(std::numeric_limits<double>::max()) ? std::numeric_limits<double>::infinity()
                                                                         : std::exp(log_v);
  return {BesselKind::I0, x, v, BesselMethod::Asymptotic};
}

GaussPoly hankel_transform(const GaussPoly& f) {
  if (f.dim() != Dim::Two) throw std::invalid_argument("hankel_transform requires a 2D function");
  return exact_transform(f);
}

GaussPoly radial_laplacian(const GaussPoly& f) {
  if (f.dim() != Dim::Two) throw std::invalid_argument("radial_laplacian requires a 2D function");
  return derivative_2q(f, 1);
}

GaussPoly convolve_gauss_2d(const GaussPoly& f, double b) {
  if (f.dim() != Dim::Two) throw std::invalid_argument("convolve_gauss_2d requires a 2D function");
  return convolve_gauss(f, b);
}

}  // namespace bochner
