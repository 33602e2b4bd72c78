// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace bochner {

namespace {

constexpr double kSeriesCutoff = 1e-4;

double dim_factor(Dim d) { return d == Dim::One ? std::sqrt(2.0 / std::numbers::pi) : 1.0; }

double scale_of(const GaussSum& f) {
  double s = 0.0;
  for (const auto& t : f.terms()) s = std::max(s, t.max_abs_coeff());
  return s;
}

// int_0^inf dr/r^2 [f(0) - f(r)], without the dimension factor.
double odd_moment_integral(const GaussSum& f) {
  const double f0 = f.at_origin();
  const double scale = std::max(std::abs(f0), scale_of(f));
  if (scale == 0.0) return 0.0;
  const auto [c2, c4] = f.origin_series();

  double cut = std::max(10.0, std::sqrt(40.0 / f.min_width()));
  while (std::abs(f.eval(cut)) > 1e-16 * scale && cut < 1e4) cut *= 1.25;

  auto integrand = [&](double r) {
    if (r < kSeriesCutoff) return c2 + c4 * r * r;
    return (f0 - f.eval(r)) / (r * r);
  };

  // Panels of roughly one Gaussian width keep every panel smooth.
  const double panel = std::clamp(1.0 / std::sqrt(f.min_width()), 0.25, 2.0);
  const int n_panels = static_cast<int>(std::ceil(cut / panel));
  double total = 0.0;
  for (int i = 0; i < n_panels; ++i) {
    const double lo = cut * i / n_panels;
    const double hi = cut * (i + 1) / n_panels;
    double err = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, lo, hi, 12, 1e-14, &err);
  }
  total += f0 / cut;  // int_cut^inf f(0)/r^2 dr; f itself is negligible there
  if (!std::isfinite(total)) throw std::runtime_error("first-moment quadrature did not converge");
  return total;
}

}  // namespace

std::string to_string(MomentMethod m) {
  switch (m) {
    case MomentMethod::RSpaceFormula: return "r_space_formula";
    case MomentMethod::ClosedForm: return "closed_form";
    case MomentMethod::QuadratureOnPhi: return "quadrature_on_phi";
  }
  return "unknown";
}

double mu1_r_space(const GaussSum& f) { return dim_factor(f.dim()) * odd_moment_integral(f); }

double mu1_r_space(const GaussPoly& f) { return mu1_r_space(GaussSum(f)); }

double mu1_closed_form(const GaussPoly& f) {
  const GaussPoly phi = exact_transform(f);
  const double c = phi.width();
  const auto p = phi.coeffs();
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double kk = static_cast<double>(k);
    if (f.dim() == Dim::One) {
      // int_0^inf s^{2k+1} e^{-c s^2} ds = k! / (2 c^{k+1})
      total += p[k] * std::tgamma(kk + 1.0) / (2.0 * std::pow(c, kk + 1.0));
    } else {
      // int_0^inf k^{2k+2} e^{-c k^2} dk = Gamma(k + 3/2) / (2 c^{k+3/2})
      total += p[k] * std::tgamma(kk + 1.5) / (2.0 * std::pow(c, kk + 1.5));
    }
  }
  return total;
}

double mu0(const GaussSum& f) {
  const double f0 = f.at_origin();
  return f.dim() == Dim::One ? std::sqrt(std::numbers::pi / 2.0) * f0 : f0;
}

double mu0(const GaussPoly& f) { return mu0(GaussSum(f)); }

double mu_even(const GaussPoly& f, int q) { return mu0(derivative_2q(f, q)); }

MomentReport moment_report(const GaussSum& f) {
  MomentReport r;
  r.mu0 = mu0(f);
  r.mu1 = mu1_r_space(f);
  r.mean_s = r.mu1 / r.mu0;
  r.method = MomentMethod::RSpaceFormula;
  return r;
}

MomentReport moment_report(const GaussPoly& f) { return moment_report(GaussSum(f)); }

MomentReport moment_report_closed_form(const GaussPoly& f) {
  MomentReport r;
  r.mu0 = mu0(f);
  r.mu1 = mu1_closed_form(f);
  r.mean_s = r.mu1 / r.mu0;
  r.method = MomentMethod::ClosedForm;
  return r;
}

std::vector<AssociateMoments> mean_s_per_associate(const AssociateSet& set) {
  std::vector<AssociateMoments> out;
  out.reserve(set.entries.size());
  for (const auto& e : set.entries) {
    AssociateMoments m{e.tag.label(), std::nullopt, {}};
    try {
      m.report = moment_report(e.f);
    } catch (const std::exception& ex) {
      m.error = ex.what();
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace bochner
