// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact algebra of even Gaussian-polynomial functions
//
//     f(r) = exp(-a r^2) * Q(r^2),   Q(t) = sum_k p_k t^k,
//
// closed under the cosine (1D) and Fourier-Bessel (2D) transforms, sign-weighted
// even derivatives / radial Laplacians, and Gaussian convolution.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bochner {

/// Ambient transform dimension. Only affects transform and Laplacian semantics.
enum class Dim : int { One = 1, Two = 2 };

inline int to_int(Dim d) { return static_cast<int>(d); }
Dim dim_from_int(int d);  // throws std::invalid_argument

/// Highest basis index available to basis_function() and mix().
inline constexpr int kMaxBasisIndex = 5;

class GaussPoly {
 public:
  /// Trailing zero coefficients are dropped; an empty or all-zero sequence is
  /// the zero function. Throws std::invalid_argument unless width > 0 and all
  /// coefficients are finite.
  GaussPoly(Dim dim, double width, std::vector<double> coeffs);

  Dim dim() const { return dim_; }
  double width() const { return width_; }
  std::span<const double> coeffs() const { return coeffs_; }
  /// Degree of Q in t = r^2; 0 for constants and for the zero function.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double at_origin() const { return coeffs_.empty() ? 0.0 : coeffs_.front(); }
  double max_abs_coeff() const;

  GaussPoly scaled(double factor) const;

  friend bool operator==(const GaussPoly&, const GaussPoly&) = default;

 private:
  Dim dim_;
  double width_;
  std::vector<double> coeffs_;
};

/// Coefficients over the transform eigenbasis (even Hermite functions in 1D,
/// Laguerre functions in 2D).
struct BasisMix {
  Dim dim = Dim::One;
  std::vector<double> c;
  bool normalized = false;  // rescale c to unit Euclidean norm before mixing
};

/// Exact basis function: xi_0, xi_2, xi_4, ... (1D) or sqrt(2) L_m(x^2) e^{-x^2/2} (2D).
GaussPoly basis_function(Dim dim, int index);

/// Transform eigenvalue of basis_function(dim, index): (-1)^index in both dims.
inline double basis_eigenvalue(int index) { return index % 2 == 0 ? 1.0 : -1.0; }

/// Exact linear combination; width 1/2. Throws on all-zero or oversized input.
GaussPoly mix(const BasisMix& m);

/// Inverse of mix() for width-1/2 functions of degree < kMaxBasisIndex.
BasisMix project_onto_basis(const GaussPoly& f);

/// Cosine transform (1D) or Fourier-Bessel transform (2D), in closed form.
GaussPoly exact_transform(const GaussPoly& f);

/// Same result for width 1/2 via the basis eigenvalues; used as a cross-check.
GaussPoly eigenbasis_transform(const GaussPoly& f);

double eval(const GaussPoly& f, double r);
long double eval_extended(const GaussPoly& f, long double r);

/// f(i r) = exp(+a r^2) Q(-r^2). Saturates to +/-inf when the exponent would
/// overflow.
double eval_imag(const GaussPoly& f, double r);

/// f(w^k r) with w = exp(i pi / 4), k in {0, 1, 2, 3}.
std::complex<double> eval_complex_ray(const GaussPoly& f, double r, int root_index);

/// (-1)^q d^{2q}f/dr^{2q} in 1D; q-fold radial Laplacian -(1/x) d/dx (x d/dx) in 2D.
GaussPoly derivative_2q(const GaussPoly& f, int q);

/// Convolution partner whose transform is exp(-s^2 / (2 b^2)) * transform(f).
GaussPoly convolve_gauss(const GaussPoly& f, double b);

struct NonnegResult {
  bool nonneg = true;
  std::optional<double> witness_t;  // Q(t) < -eps there
  double witness_value = 0.0;       // Q(witness_t)
  std::optional<double> witness_r() const;
};

/// Decides Q(t) >= -eps for all t >= 0, eps = 1e-12 * max|p_k|.
NonnegResult is_nonneg(const GaussPoly& f);

/// Finite sum of Gaussian-polynomials of possibly different widths. Used for
/// complement functions psi - sum w_i psi_{b_i}, which leave the single-width
/// algebra.
class GaussSum {
 public:
  explicit GaussSum(std::vector<GaussPoly> terms);
  explicit GaussSum(GaussPoly single) : GaussSum(std::vector<GaussPoly>{std::move(single)}) {}

  std::span<const GaussPoly> terms() const { return terms_; }
  Dim dim() const { return terms_.front().dim(); }
  double min_width() const;
  double at_origin() const;
  /// f(r) = f(0) - c2 r^2 - c4 r^4 + ... ; returns c2 and c4 for the near-origin series.
  std::pair<double, double> origin_series() const;
  double eval(double r) const;
  double eval_imag(double r) const;

 private:
  std::vector<GaussPoly> terms_;
};

}  // namespace bochner
