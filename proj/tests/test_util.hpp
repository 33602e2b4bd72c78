// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent numerical routes used as oracles: plain quadrature of the
// defining integrals with Boost special functions, no use of the closed-form
// algebra under test.

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "bochner/gauss_poly.hpp"

namespace bochner::testing {

template <class F>
double integrate(F&& f, double lo, double hi, int panels = 64) {
  double sum = 0.0;
  const double h = (hi - lo) / panels;
  for (int k = 0; k < panels; ++k)
    sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo + k * h, lo + (k + 1) * h, 8, 1e-14);
  return sum;
}

inline double reach(const GaussPoly& f) { return std::sqrt(80.0 / f.width()) + 2.0; }

/// sqrt(2/pi) int_0^inf cos(s r) f(r) dr, or int_0^inf x J0(k x) f(x) dx.
inline double transform_by_quadrature(const GaussPoly& f, double s) {
  const double R = reach(f);
  if (f.dim() == Dim::One)
    return std::sqrt(2.0 / std::numbers::pi) *
           integrate([&](double r) { return std::cos(s * r) * eval(f, r); }, 0.0, R, 128);
  return integrate([&](double x) { return x * boost::math::cyl_bessel_j(0, s * x) * eval(f, x); }, 0.0, R, 128);
}

/// int_0^inf w(r) f(r)^2 dr with w = 1 (1D) or r (2D), by quadrature.
inline double norm2_by_quadrature(const GaussPoly& f) {
  const double R = reach(f);
  return integrate([&](double r) {
    const double v = eval(f, r);
    return (f.dim() == Dim::One ? 1.0 : r) * v * v;
  }, 0.0, R, 128);
}

/// The same integral in closed form through Gaussian moments:
/// 1D int_0^inf e^{-2a r^2} r^{2k} dr = Gamma(k + 1/2) / (2 (2a)^{k + 1/2});
/// 2D int_0^inf x e^{-2a x^2} x^{2k} dx = k! / (2 (2a)^{k + 1}).
inline double norm2_closed_form(const GaussPoly& f) {
  const auto p = f.coeffs();
  const double a2 = 2.0 * f.width();
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double k = static_cast<double>(i + j);
      const double m = f.dim() == Dim::One ? std::tgamma(k + 0.5) / (2.0 * std::pow(a2, k + 0.5))
                                           : std::tgamma(k + 1.0) / (2.0 * std::pow(a2, k + 1.0));
      total += p[i] * p[j] * m;
    }
  return total;
}

inline std::vector<double> random_unit(std::mt19937_64& gen, std::size_t n = 5) {
  std::normal_distribution<double> normal;
  std::vector<double> c(n);
  double s = 0.0;
  for (double& x : c) {
    x = normal(gen);
    s += x * x;
  }
  for (double& x : c) x /= std::sqrt(s);
  return c;
}

inline GaussPoly random_mix(std::mt19937_64& gen, Dim dim) { return mix({dim, random_unit(gen), false}); }

// Max pointwise difference on [0, rmax] relative to the larger sup norm.
inline double pointwise_distance(const GaussPoly& a, const GaussPoly& b, double rmax = 10.0) {
  double scale = 0.0, diff = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double r = rmax * i / 2000.0;
    const double x = eval(a, r), y = eval(b, r);
    scale = std::max({scale, std::abs(x), std::abs(y)});
    diff = std::max(diff, std::abs(x - y));
  }
  return scale == 0.0 ? diff : diff / scale;
}

/// Maximum relative coefficient difference against the larger magnitude.
inline double coeff_distance(const GaussPoly& a, const GaussPoly& b) {
  const auto pa = a.coeffs(), pb = b.coeffs();
  const std::size_t n = std::max(pa.size(), pb.size());
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < pa.size() ? pa[i] : 0.0;
    const double y = i < pb.size() ? pb[i] : 0.0;
    scale = std::max({scale, std::abs(x), std::abs(y)});
    diff = std::max(diff, std::abs(x - y));
  }
  return scale == 0.0 ? diff : diff / scale;
}

/// The eight-component example and its transform.
inline GaussPoly eight_component_psi() {
  return GaussPoly(Dim::One, 0.5, {0.718081, -0.064879, -0.0685793, 0.0269736, 0.00119983});
}
inline GaussPoly eight_component_phi() {
  return GaussPoly(Dim::One, 0.5, {0.97805, -1.24138, 0.587989, -0.0605688, 0.00119983});
}

}  // namespace bochner::testing
