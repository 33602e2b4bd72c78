// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/gauss_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

namespace bochner {

namespace {

using Poly = std::vector<double>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0.0) p.pop_back();
}

template <class T>
std::vector<T> derivative(const std::vector<T>& p) {
  if (p.size() <= 1) return {};
  std::vector<T> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<T>(k) * p[k];
  return d;
}

// dst += factor * src
template <class T>
void axpy(std::vector<T>& dst, T factor, const std::vector<T>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), T(0));
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] += factor * src[k];
}

template <class T>
std::vector<T> times_t(const std::vector<T>& p) {
  if (p.empty()) return {};
  std::vector<T> out(p.size() + 1, T(0));
  std::copy(p.begin(), p.end(), out.begin() + 1);
  return out;
}

// Laplacian chains cancel heavily, so they run in extended precision.
using LPoly = std::vector<long double>;

LPoly widen(std::span<const double> p) { return LPoly(p.begin(), p.end()); }

Poly narrow(const LPoly& p) { return Poly(p.begin(), p.end()); }

long double horner(std::span<const double> p, long double t) {
  long double acc = 0.0L;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + static_cast<long double>(*it);
  return acc;
}

std::complex<long double> horner(std::span<const double> p, std::complex<long double> t) {
  std::complex<long double> acc = 0.0L;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + static_cast<long double>(*it);
  return acc;
}

// Sign-weighted Laplacian on g(t) = exp(-a t) Q(t), t = r^2, in dimension D:
//   L g = -(2 D g' + 4 t g''),  g' = e^{-at}(Q' - aQ),  g'' = e^{-at}(Q'' - 2aQ' + a^2 Q).
// D = 1 gives -d^2/dr^2, D = 2 gives the radial Laplacian -(1/x) d/dx (x d/dx).
LPoly laplacian_coeffs(const LPoly& q, long double a, int dim) {
  LPoly d1 = derivative(q);
  LPoly d2 = derivative(d1);

  LPoly first = d1;  // Q' - aQ
  axpy(first, -a, q);

  LPoly second = d2;  // Q'' - 2aQ' + a^2 Q
  axpy(second, -2.0L * a, d1);
  axpy(second, a * a, q);

  LPoly out;
  axpy(out, -2.0L * dim, first);
  axpy(out, -4.0L, times_t(second));
  while (!out.empty() && out.back() == 0.0L) out.pop_back();
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Hermite H_{2m}(r) as a polynomial in t = r^2.
Poly hermite_even(int m) {
  const int n = 2 * m;
  Poly p(m + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    p[m - k] = sign * factorial(n) * std::pow(2.0, n - 2 * k) / (factorial(k) * factorial(n - 2 * k));
  }
  return p;
}

// Laguerre L_m(t).
Poly laguerre(int m) {
  Poly p(m + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    p[k] = sign * binomial(m, k) / factorial(k);
  }
  return p;
}

// Positive real roots of p, found as eigenvalues of the companion matrix and
// polished by Newton steps.
std::vector<double> positive_real_roots(const Poly& p) {
  std::vector<double> roots;
  if (p.size() < 2) return roots;
  const int n = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  const Poly dp = derivative(p);
  for (const auto& z : solver.eigenvalues()) {
    if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) continue;
    double t = z.real();
    for (int it = 0; it < 3; ++it) {
      const long double d = horner(dp, static_cast<long double>(t));
      if (d == 0.0L) break;
      const long double step = horner(p, static_cast<long double>(t)) / d;
      if (!std::isfinite(static_cast<double>(step))) break;
      t -= static_cast<double>(step);
    }
    if (t > 0.0) roots.push_back(t);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

Dim dim_from_int(int d) {
  if (d == 1) return Dim::One;
  if (d == 2) return Dim::Two;
  throw std::invalid_argument("dimension must be 1 or 2, got " + std::to_string(d));
}

GaussPoly::GaussPoly(Dim dim, double width, std::vector<double> coeffs)
    : dim_(dim), width_(width), coeffs_(std::move(coeffs)) {
  if (!(width_ > 0.0) || !std::isfinite(width_))
    throw std::invalid_argument("Gaussian width must be positive and finite");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw std::invalid_argument("polynomial coefficients must be finite");
  trim(coeffs_);
}

double GaussPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

GaussPoly GaussPoly::scaled(double factor) const {
  Poly p = coeffs_;
  for (double& c : p) c *= factor;
  return GaussPoly(dim_, width_, std::move(p));
}

GaussPoly basis_function(Dim dim, int index) {
  if (index < 0 || index >= kMaxBasisIndex)
    throw std::out_of_range("basis index " + std::to_string(index) + " outside [0, " +
                            std::to_string(kMaxBasisIndex) + ")");
  if (dim == Dim::One) {
    const int n = 2 * index;
    const double norm = 1.0 / std::sqrt(std::pow(2.0, n) * factorial(n) * std::sqrt(std::numbers::pi));
    Poly p = hermite_even(index);
    for (double& c : p) c *= norm;
    return GaussPoly(dim, 0.5, std::move(p));
  }
  Poly p = laguerre(index);
  for (double& c : p) c *= std::numbers::sqrt2;
  return GaussPoly(dim, 0.5, std::move(p));
}

GaussPoly mix(const BasisMix& m) {
  if (m.c.empty()) throw std::invalid_argument("empty coefficient vector");
  if (static_cast<int>(m.c.size()) > kMaxBasisIndex)
    throw std::invalid_argument("at most " + std::to_string(kMaxBasisIndex) + " basis coefficients supported");
  double norm2 = 0.0;
  for (double c : m.c) {
    if (!std::isfinite(c)) throw std::invalid_argument("basis coefficients must be finite");
    norm2 += c * c;
  }
  if (norm2 == 0.0) throw std::invalid_argument("basis coefficients are all zero");
  const double scale = m.normalized ? 1.0 / std::sqrt(norm2) : 1.0;

  Poly p;
  for (std::size_t i = 0; i < m.c.size(); ++i) {
    if (m.c[i] == 0.0) continue;
    const GaussPoly b = basis_function(m.dim, static_cast<int>(i));
    axpy(p, scale * m.c[i], Poly(b.coeffs().begin(), b.coeffs().end()));
  }
  return GaussPoly(m.dim, 0.5, std::move(p));
}

BasisMix project_onto_basis(const GaussPoly& f) {
  if (f.width() != 0.5) throw std::invalid_argument("basis projection requires width 1/2");
  if (static_cast<int>(f.degree()) >= kMaxBasisIndex)
    throw std::invalid_argument("polynomial degree exceeds the basis size");
  // Basis polynomials are triangular in t: back-substitute from the top degree.
  Poly rest(f.coeffs().begin(), f.coeffs().end());
  BasisMix out{f.dim(), std::vector<double>(rest.empty() ? 1 : rest.size(), 0.0), false};
  for (int k = static_cast<int>(rest.size()) - 1; k >= 0; --k) {
    const GaussPoly b = basis_function(f.dim(), k);
    const double c = rest[k] / b.coeffs()[k];
    out.c[k] = c;
    axpy(rest, -c, Poly(b.coeffs().begin(), b.coeffs().end()));
  }
  return out;
}

GaussPoly exact_transform(const GaussPoly& f) {
  // Transform of exp(-a t) is g0 exp(-c t), c = 1/(4a); multiplication by t
  // maps to the sign-weighted Laplacian in the conjugate variable.
  const double a = f.width();
  const double c = 1.0 / (4.0 * a);
  const int d = to_int(f.dim());
  const double g0 = f.dim() == Dim::One ? 1.0 / std::sqrt(2.0 * a) : 1.0 / (2.0 * a);

  LPoly image;
  LPoly power{static_cast<long double>(g0)};
  const auto p = f.coeffs();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) power = laplacian_coeffs(power, c, d);
    axpy(image, static_cast<long double>(p[k]), power);
  }
  return GaussPoly(f.dim(), c, narrow(image));
}

GaussPoly eigenbasis_transform(const GaussPoly& f) {
  BasisMix m = project_onto_basis(f);
  for (std::size_t i = 0; i < m.c.size(); ++i) m.c[i] *= basis_eigenvalue(static_cast<int>(i));
  bool any = std::any_of(m.c.begin(), m.c.end(), [](double c) { return c != 0.0; });
  if (!any) return GaussPoly(f.dim(), 0.5, {});
  return mix(m);
}

long double eval_extended(const GaussPoly& f, long double r) {
  const long double t = r * r;
  return std::exp(-static_cast<long double>(f.width()) * t) * horner(f.coeffs(), t);
}

double eval(const GaussPoly& f, double r) {
  const long double t = static_cast<long double>(r) * r;
  return std::exp(-f.width() * r * r) * static_cast<double>(horner(f.coeffs(), t));
}

double eval_imag(const GaussPoly& f, double r) {
  const long double t = static_cast<long double>(r) * r;
  const long double q = horner(f.coeffs(), -t);
  if (q == 0.0L) return 0.0;
  const long double log_mag = f.width() * t + std::log(std::abs(q));
  if (log_mag > std::log(std::numeric_limits<double>::max()))
    return std::copysign(std::numeric_limits<double>::infinity(), static_cast<double>(q));
  return static_cast<double>(std::exp(static_cast<long double>(f.width()) * t) * q);
}

std::complex<double> eval_complex_ray(const GaussPoly& f, double r, int root_index) {
  if (root_index < 0 || root_index > 3) throw std::out_of_range("eighth-root index must be in [0, 3]");
  // (w^k r)^2 = i^k r^2
  static const std::complex<long double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<long double> t = kIPow[root_index] * (static_cast<long double>(r) * r);
  const std::complex<long double> q = horner(f.coeffs(), t);
  const std::complex<long double> expo = -static_cast<long double>(f.width()) * t;
  if (expo.real() > std::log(std::numeric_limits<double>::max())) {
    const double inf = std::numeric_limits<double>::infinity();
    return {std::copysign(inf, static_cast<double>(q.real())), 0.0};
  }
  const std::complex<long double> v = std::exp(expo) * q;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

GaussPoly derivative_2q(const GaussPoly& f, int q) {
  if (q < 0) throw std::invalid_argument("derivative order must be non-negative");
  LPoly p = widen(f.coeffs());
  for (int i = 0; i < q; ++i) p = laplacian_coeffs(p, f.width(), to_int(f.dim()));
  return GaussPoly(f.dim(), f.width(), narrow(p));
}

GaussPoly convolve_gauss(const GaussPoly& f, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("convolution width b must be positive");
  const GaussPoly phi = exact_transform(f);
  const GaussPoly damped(phi.dim(), phi.width() + 1.0 / (2.0 * b * b),
                         Poly(phi.coeffs().begin(), phi.coeffs().end()));
  return exact_transform(damped);
}

std::optional<double> NonnegResult::witness_r() const {
  if (!witness_t) return std::nullopt;
  return std::sqrt(*witness_t);
}

NonnegResult is_nonneg(const GaussPoly& f) {
  NonnegResult res;
  if (f.is_zero()) return res;
  const Poly p(f.coeffs().begin(), f.coeffs().end());
  const double eps = 1e-12 * f.max_abs_coeff();
  auto value = [&](double t) { return static_cast<double>(horner(p, static_cast<long double>(t))); };
  auto record = [&](double t, double v) {
    if (v < -eps && (res.nonneg || v < res.witness_value)) {
      res.nonneg = false;
      res.witness_t = t;
      res.witness_value = v;
    }
  };

  record(0.0, p.front());
  // Minima of Q on (0, inf) sit at positive real roots of Q'.
  for (double t : positive_real_roots(derivative(p))) record(t, value(t));
  if (p.size() > 1 && p.back() < 0.0) {
    // Eventually negative: step past every root of Q until the sign shows.
    double t = 1.0;
    for (double root : positive_real_roots(p)) t = std::max(t, 2.0 * root);
    while (value(t) >= -eps && t < 1e12) t *= 2.0;
    record(t, value(t));
    if (res.nonneg) {
      res.nonneg = false;
      res.witness_t = t;
      res.witness_value = value(t);
    }
  }
  return res;
}

GaussSum::GaussSum(std::vector<GaussPoly> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("GaussSum needs at least one term");
  for (const auto& t : terms_)
    if (t.dim() != terms_.front().dim()) throw std::invalid_argument("GaussSum terms must share a dimension");
}

double GaussSum::min_width() const {
  double w = terms_.front().width();
  for (const auto& t : terms_) w = std::min(w, t.width());
  return w;
}

double GaussSum::at_origin() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.at_origin();
  return s;
}

std::pair<double, double> GaussSum::origin_series() const {
  // exp(-a t) Q(t) = e0 + e1 t + e2 t^2 + ...
  double c2 = 0.0;
  double c4 = 0.0;
  for (const auto& term : terms_) {
    const auto p = term.coeffs();
    const double a = term.width();
    auto coef = [&](std::size_t k) { return k < p.size() ? p[k] : 0.0; };
    const double e1 = coef(1) - a * coef(0);
    const double e2 = coef(2) - a * coef(1) + 0.5 * a * a * coef(0);
    c2 -= e1;
    c4 -= e2;
  }
  return {c2, c4};
}

double GaussSum::eval(double r) const {
  long double s = 0.0L;
  for (const auto& t : terms_) s += eval_extended(t, r);
  return static_cast<double>(s);
}

double GaussSum::eval_imag(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += bochner::eval_imag(t, r);
  return s;
}

}  // namespace bochner
