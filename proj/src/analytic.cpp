// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/analytic.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bochner/bessel2d.hpp"
#include "bochner/moments.hpp"

namespace bochner {

std::string to_string(BoundId id) {
  switch (id) {
    case BoundId::Cosh: return "cosh";
    case BoundId::I0: return "I0";
    case BoundId::Sum4: return "cosh+cos";
    case BoundId::Diff4: return "cosh-cos";
    case BoundId::Omega8_1: return "omega8_1";
    case BoundId::Omega8_2: return "omega8_2";
    case BoundId::Omega8_3: return "omega8_3";
    case BoundId::Omega8_4: return "omega8_4";
    case BoundId::Multicomponent: return "multicomponent";
  }
  return "?";
}

namespace {

void require_dim(const GaussPoly& f, Dim d, const char* what) {
  if (f.dim() != d) throw std::invalid_argument(std::string(what) + ": wrong dimension");
}

void require_mean(double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("mean momentum must be finite");
}

// Records one grid point. `margin` is oriented so that >= 0 is the bound
// holding; a point is a violation below -tol * max(1, |lhs|). Points where
// both sides overflowed carry no information and are skipped.
// Returns true when the scan should stop.
bool record(BoundReport& rep, const BoundOptions& opts, double r, double lhs, double margin) {
  if (!std::isfinite(margin)) {
    if (std::isnan(margin)) return false;
    margin = margin > 0 ? std::numeric_limits<double>::max() : std::numeric_limits<double>::lowest();
  }
  if (opts.keep_curve) rep.margin_curve.emplace_back(r, margin);
  const double scale = std::isfinite(lhs) ? std::max(1.0, std::abs(lhs)) : 1.0;
  if (margin < -kBoundRelTolerance * scale && !rep.first_violation) {
    rep.first_violation = r;
    rep.first_violation_margin = margin;
    return opts.stop_at_first_violation;
  }
  return false;
}

}  // namespace

BoundReport cosh_bound(const GaussPoly& f, double mean_s, const RGrid& grid, BoundOptions opts) {
  require_dim(f, Dim::One, "cosh_bound");
  require_mean(mean_s);
  BoundReport rep;
  rep.id = BoundId::Cosh;
  rep.mean_s_used = {mean_s};
  rep.negative_mean = mean_s < 0.0;
  const double f0 = f.at_origin();
  for (double r : grid.points()) {
    const double lhs = eval_imag(f, r);
    if (record(rep, opts, r, lhs, lhs - f0 * std::cosh(mean_s * r))) break;
  }
  return rep;
}

BoundReport i0_bound(const GaussPoly& f, double mean_k, const RGrid& grid, BoundOptions opts) {
  require_dim(f, Dim::Two, "i0_bound");
  require_mean(mean_k);
  BoundReport rep;
  rep.id = BoundId::I0;
  rep.mean_s_used = {mean_k};
  rep.negative_mean = mean_k < 0.0;
  const double f0 = f.at_origin();
  for (double x : grid.points()) {
    const double lhs = eval_imag(f, x);
    if (record(rep, opts, x, lhs, lhs - f0 * bessel_i0(mean_k * x))) break;
  }
  return rep;
}

std::pair<BoundReport, BoundReport> cosh_cos_bounds(const GaussPoly& f, double mean_s, const RGrid& grid,
                                                    BoundOptions opts) {
  require_dim(f, Dim::One, "cosh_cos_bounds");
  require_mean(mean_s);
  BoundReport sum, diff;
  sum.id = BoundId::Sum4;
  diff.id = BoundId::Diff4;
  sum.mean_s_used = diff.mean_s_used = {mean_s};
  sum.negative_mean = diff.negative_mean = mean_s < 0.0;
  const double f0 = f.at_origin();
  bool stop_sum = false, stop_diff = false;
  for (double r : grid.points()) {
    const double re = eval(f, r);
    const double im = eval_imag(f, r);
    const double c = std::cos(mean_s * r);
    const double ch = std::cosh(mean_s * r);
    if (!stop_sum) stop_sum = record(sum, opts, r, re + im, (re + im) - f0 * (c + ch));
    if (!stop_diff) stop_diff = record(diff, opts, r, re - im, f0 * (c - ch) - (re - im));
    if (stop_sum && stop_diff) break;
  }
  return {std::move(sum), std::move(diff)};
}

std::array<BoundReport, 4> omega8_bounds(const GaussPoly& f, double mean_s, const RGrid& grid, BoundOptions opts) {
  require_dim(f, Dim::One, "omega8_bounds");
  require_mean(mean_s);
  using cd = std::complex<double>;
  const cd I(0.0, 1.0);
  const cd w = std::polar(1.0, std::numbers::pi / 4.0);
  const std::array<cd, 4> rays = {cd(1.0), w, I, w * I};
  // Kernel combinations F_k(x) = sum_j c_kj cos(rays[j] x); F_1, F_2 have
  // nonnegative Taylor coefficients (convex), F_3, F_4 nonpositive (concave).
  const std::array<std::array<cd, 4>, 4> comb = {{
      {cd(1), cd(1), cd(1), cd(1)},
      {cd(1), cd(-1), cd(1), cd(-1)},
      {cd(1), -I, cd(-1), I},
      {cd(1), I, cd(-1), -I},
  }};
  const std::array<double, 4> orient = {1.0, 1.0, -1.0, -1.0};
  const std::array<BoundId, 4> ids = {BoundId::Omega8_1, BoundId::Omega8_2, BoundId::Omega8_3, BoundId::Omega8_4};

  std::array<BoundReport, 4> reps;
  for (int k = 0; k < 4; ++k) {
    reps[k].id = ids[k];
    reps[k].mean_s_used = {mean_s};
    reps[k].negative_mean = mean_s < 0.0;
  }
  std::array<bool, 4> stopped{};
  const double f0 = f.at_origin();
  for (double r : grid.points()) {
    std::array<cd, 4> z;
    std::array<cd, 4> kern;
    for (int j = 0; j < 4; ++j) {
      z[j] = eval_complex_ray(f, r, j);
      kern[j] = std::cos(rays[j] * (mean_s * r));
    }
    for (int k = 0; k < 4; ++k) {
      if (stopped[k]) continue;
      cd lhs = 0.0, rhs = 0.0;
      for (int j = 0; j < 4; ++j) {
        lhs += comb[k][j] * z[j];
        rhs += comb[k][j] * kern[j];
      }
      rhs *= f0;
      const double scale = std::max(1.0, std::abs(lhs));
      const double residue = std::abs(lhs.imag()) / scale;
      reps[k].max_imag_residue = std::max(reps[k].max_imag_residue, residue);
      if (residue > 1e-10) reps[k].numerical_error = true;
      stopped[k] = record(reps[k], opts, r, lhs.real(), orient[k] * (lhs.real() - rhs.real()));
    }
    if (stopped[0] && stopped[1] && stopped[2] && stopped[3]) break;
  }
  return reps;
}

BoundReport multicomponent_bound(const GaussPoly& f, const std::vector<double>& widths,
                                 const std::vector<double>& weights, const RGrid& grid, BoundOptions opts) {
  require_dim(f, Dim::One, "multicomponent_bound");
  if (widths.empty() || widths.size() != weights.size())
    throw std::invalid_argument("multicomponent bound needs one weight per width");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be positive");
    wsum += w;
  }
  if (wsum > 1.0 + 1e-12) throw std::invalid_argument("weights must sum to at most 1");

  struct Component {
    double amplitude;
    double mean_s;
  };
  std::vector<Component> comps;
  std::vector<GaussPoly> rest{f};
  BoundReport rep;
  rep.id = BoundId::Multicomponent;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const GaussPoly fb = convolve_gauss(f, widths[i]);
    const MomentReport m = moment_report(fb);
    comps.push_back({weights[i] * fb.at_origin(), m.mean_s});
    rest.push_back(fb.scaled(-weights[i]));
  }
  const GaussSum complement(std::move(rest));
  if (std::abs(complement.at_origin()) > 1e-14 * std::abs(f.at_origin())) {
    const MomentReport mc = moment_report(complement);
    comps.push_back({complement.at_origin(), mc.mean_s});
  }
  for (const auto& c : comps) {
    rep.mean_s_used.push_back(c.mean_s);
    if (c.mean_s < 0.0) rep.negative_mean = true;
  }
  for (double r : grid.points()) {
    const double lhs = eval_imag(f, r);
    double rhs = 0.0;
    for (const auto& c : comps) rhs += c.amplitude * std::cosh(c.mean_s * r);
    if (record(rep, opts, r, lhs, lhs - rhs)) break;
  }
  return rep;
}

TestVerdict analytic_suite(const AssociateSet& set, const RGrid& grid) {
  TestVerdict v;
  const bool two_d = set.base().dim() == Dim::Two;
  v.criterion = two_d ? "I0" : "cosh";
  for (const auto& e : set.entries) {
    const MomentReport m = moment_report(e.f);
    const BoundOptions opts{.keep_curve = false, .stop_at_first_violation = true};
    const BoundReport rep = two_d ? i0_bound(e.f, m.mean_s, grid, opts) : cosh_bound(e.f, m.mean_s, grid, opts);
    v.cost += grid.points().size();
    if (rep.first_violation) {
      v.detected = true;
      v.witness = Witness{e.tag.label(), *rep.first_violation, rep.first_violation_margin};
      break;
    }
  }
  return v;
}

}  // namespace bochner
