// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dimension-2 kernels: J0 / I0 and the Fourier-Bessel specializations of the
// shared function algebra.

#pragma once

#include "bochner/gauss_poly.hpp"

namespace bochner {

enum class BesselKind { J0, I0 };
enum class BesselMethod { Series, Asymptotic };

struct BesselEval {
  BesselKind kind;
  double argument;
  double value;
  BesselMethod method;
};

/// Power series below |x| = 15, Hankel asymptotic expansion above.
BesselEval eval_j0(double x);
/// I0(x) = J0(ix). Saturates to +inf past the double range.
BesselEval eval_i0(double x);

inline double bessel_j0(double x) { return eval_j0(x).value; }
inline double bessel_i0(double x) { return eval_i0(x).value; }

/// log(I0(x)) without overflow, for x >= 0.
double log_bessel_i0(double x);

/// Fourier-Bessel transform int_0^inf x dx J0(kx) f(x) in closed form.
GaussPoly hankel_transform(const GaussPoly& f);

/// -(1/x) d/dx (x d/dx) f.
GaussPoly radial_laplacian(const GaussPoly& f);

/// Partner of exp(-k^2 / (2 b^2)) * hankel_transform(f).
GaussPoly convolve_gauss_2d(const GaussPoly& f, double b);

}  // namespace bochner
