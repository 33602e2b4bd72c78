// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bochner/analytic.hpp"
#include "bochner/moments.hpp"

namespace bochner {

std::string TestVerdict::witness_string() const {
  if (!witness) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "@%.6g", witness->r);
  return witness->associate + buf;
}

std::string AssociateTag::label() const {
  switch (kind) {
    case AssociateKind::Base: return "psi";
    case AssociateKind::D2q: return "psi_" + std::to_string(2 * q);
    case AssociateKind::Conv: return "psi_b";
    case AssociateKind::ConvD2q: return "psi_b" + std::to_string(2 * q);
  }
  return "?";
}

const Associate* AssociateSet::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.tag.label() == label) return &e;
  return nullptr;
}

AssociateSet AssociateSet::subset(const std::vector<std::string>& labels) const {
  AssociateSet out;
  out.b = b;
  out.qmax = qmax;
  for (const auto& l : labels) {
    const Associate* e = find(l);
    if (!e) throw std::out_of_range("no associate labelled " + l);
    out.entries.push_back(*e);
  }
  return out;
}

AssociateSet build_associates(const GaussPoly& f, std::optional<double> b, int qmax) {
  if (qmax < 0 || qmax > 8) throw std::invalid_argument("qmax must lie in [0, 8]");
  if (b && !(*b > 0.0 && std::isfinite(*b))) throw std::invalid_argument("convolution width b must be positive");
  AssociateSet set;
  set.b = b;
  set.qmax = qmax;
  set.entries.push_back({{AssociateKind::Base, 0, 0.0}, f});
  GaussPoly d = f;
  for (int q = 1; q <= qmax; ++q) {
    d = derivative_2q(d, 1);
    set.entries.push_back({{AssociateKind::D2q, q, 0.0}, d});
  }
  if (b) {
    GaussPoly fb = convolve_gauss(f, *b);
    set.entries.push_back({{AssociateKind::Conv, 0, *b}, fb});
    for (int q = 1; q <= qmax; ++q) {
      fb = derivative_2q(fb, 1);
      set.entries.push_back({{AssociateKind::ConvD2q, q, *b}, fb});
    }
  }
  return set;
}

std::string CriterionId::name() const {
  switch (kind) {
    case CriterionKind::Maximality: return "maximality";
    case CriterionKind::EvenMoments: return "even_moments";
    case CriterionKind::OddMomentSign: return "odd_moment_sign";
    case CriterionKind::Toeplitz: return "toeplitz" + std::to_string(order);
    case CriterionKind::Cosh: return "cosh";
    case CriterionKind::I0: return "I0";
    case CriterionKind::CoshCos: return "cosh_cos";
    case CriterionKind::Omega8: return "omega8";
    case CriterionKind::Multicomponent: return "multicomponent";
  }
  return "?";
}

CriterionId CriterionId::parse(const std::string& s) {
  static const std::pair<const char*, CriterionKind> simple[] = {
      {"maximality", CriterionKind::Maximality}, {"even_moments", CriterionKind::EvenMoments},
      {"odd_moment_sign", CriterionKind::OddMomentSign}, {"cosh", CriterionKind::Cosh},
      {"I0", CriterionKind::I0}, {"cosh_cos", CriterionKind::CoshCos},
      {"omega8", CriterionKind::Omega8}, {"multicomponent", CriterionKind::Multicomponent},
  };
  for (const auto& [n, k] : simple)
    if (s == n) return {k, 0};
  if (s.rfind("toeplitz", 0) == 0) {
    std::string digits = s.substr(8);
    if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
      digits = digits.substr(1, digits.size() - 2);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int n = std::stoi(digits);
      if (n < 2 || n > 16) throw std::invalid_argument("Toeplitz order must lie in [2, 16]: " + s);
      return {CriterionKind::Toeplitz, n};
    }
  }
  throw std::invalid_argument("unknown criterion '" + s + "'");
}

bool criterion_supports(const CriterionId& id, Dim dim) {
  switch (id.kind) {
    case CriterionKind::Cosh:
    case CriterionKind::CoshCos:
    case CriterionKind::Omega8:
    case CriterionKind::Multicomponent: return dim == Dim::One;
    case CriterionKind::I0: return dim == Dim::Two;
    default: return true;
  }
}

void ChecklistParams::validate() const {
  if (b && !(*b > 0.0 && std::isfinite(*b))) throw std::invalid_argument("b must be positive");
  if (qmax < 0 || qmax > 8) throw std::invalid_argument("qmax must lie in [0, 8]");
  toeplitz_grid.validate();
  if (!(toeplitz_grid.r_min > 0.0)) throw std::invalid_argument("Toeplitz grid must start at r > 0");
  imaginary_grid.validate();
  if (maximality_grid) maximality_grid->validate();
  if (multi_widths.size() != multi_weights.size() || multi_widths.empty())
    throw std::invalid_argument("multicomponent widths and weights must have equal, nonzero length");
  double wsum = 0.0;
  for (std::size_t i = 0; i < multi_widths.size(); ++i) {
    if (!(multi_widths[i] > 0.0)) throw std::invalid_argument("multicomponent widths must be positive");
    if (!(multi_weights[i] > 0.0)) throw std::invalid_argument("multicomponent weights must be positive");
    wsum += multi_weights[i];
  }
  if (wsum > 1.0 + 1e-12) throw std::invalid_argument("multicomponent weights must sum to at most 1");
}

RGrid adaptive_maximality_grid(const GaussPoly& f) {
  const double reach = std::max(10.0, std::sqrt(40.0 / f.width()));
  return {0.01, reach, 0.01};
}

namespace {

// Maximizes f on [lo, hi] by golden-section search; f is smooth and the
// bracket is two grid steps wide around a grid maximum.
std::pair<double, double> golden_max(const GaussPoly& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = eval(f, x1), f2 = eval(f, x2);
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = eval(f, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = eval(f, x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

template <class Check>
TestVerdict over_associates(std::string name, const AssociateSet& set, Check&& check) {
  TestVerdict v;
  v.criterion = std::move(name);
  for (const auto& e : set.entries) {
    std::optional<Witness> w = check(e, v.cost);
    if (w) {
      v.detected = true;
      w->associate = e.tag.label();
      v.witness = std::move(w);
      break;
    }
  }
  return v;
}

}  // namespace

TestVerdict maximality_test(const GaussPoly& f, const std::optional<RGrid>& grid) {
  TestVerdict v;
  v.criterion = "maximality";
  if (f.is_zero()) return v;
  const double f0 = f.at_origin();
  if (f0 <= 0.0) {
    v.detected = true;
    v.witness = Witness{"", 0.0, f0};
    v.cost = 1;
    return v;
  }
  const RGrid g = grid ? *grid : adaptive_maximality_grid(f);
  const auto pts = g.points();
  const double eps = 1e-12 * std::abs(f0);
  std::size_t worst = 0;
  double worst_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double val = eval(f, pts[i]);
    if (val > worst_val) {
      worst_val = val;
      worst = i;
    }
  }
  v.cost = pts.size();
  double r = pts[worst];
  double best = worst_val;
  if (!(best > f0 + eps)) {
    const double lo = std::max(worst > 0 ? pts[worst - 1] : pts[worst] - g.step, 0.0);
    const double hi = worst + 1 < pts.size() ? pts[worst + 1] : pts[worst] + g.step;
    const auto [xr, fr] = golden_max(f, lo, hi);
    v.cost += 64;
    if (fr > best) {
      r = xr;
      best = fr;
    }
  }
  if (best > f0 + eps && r > 0.0) {
    v.detected = true;
    v.witness = Witness{"", r, f0 - best};
  }
  return v;
}

TestVerdict maximality_suite(const AssociateSet& set, const std::optional<RGrid>& grid) {
  return over_associates("maximality", set, [&](const Associate& e, std::size_t& cost) -> std::optional<Witness> {
    const TestVerdict t = maximality_test(e.f, grid);
    cost += t.cost;
    return t.witness;
  });
}

TestVerdict even_moments_suite(const AssociateSet& set) {
  return over_associates("even_moments", set, [](const Associate& e, std::size_t& cost) -> std::optional<Witness> {
    ++cost;
    if (!e.f.is_zero() && e.f.at_origin() <= 0.0) return Witness{"", 0.0, e.f.at_origin()};
    return std::nullopt;
  });
}

TestVerdict odd_moment_suite(const AssociateSet& set) {
  return over_associates("odd_moment_sign", set, [](const Associate& e, std::size_t& cost) -> std::optional<Witness> {
    ++cost;
    if (e.f.is_zero()) return std::nullopt;
    const double mu1 = mu1_r_space(e.f);
    if (mu1 < 0.0) return Witness{"", 0.0, mu1};
    return std::nullopt;
  });
}

TestVerdict cosh_cos_suite(const AssociateSet& set, const RGrid& grid) {
  const BoundOptions opts{.keep_curve = false, .stop_at_first_violation = true};
  return over_associates("cosh_cos", set, [&](const Associate& e, std::size_t& cost) -> std::optional<Witness> {
    const auto [sum, diff] = cosh_cos_bounds(e.f, moment_report(e.f).mean_s, grid, opts);
    cost += 2 * grid.points().size();
    std::optional<Witness> w;
    for (const BoundReport* rep : {&sum, &diff})
      if (rep->first_violation && (!w || *rep->first_violation < w->r))
        w = Witness{"", *rep->first_violation, rep->first_violation_margin};
    return w;
  });
}

TestVerdict omega8_suite(const AssociateSet& set, const RGrid& grid) {
  const BoundOptions opts{.keep_curve = false, .stop_at_first_violation = true};
  return over_associates("omega8", set, [&](const Associate& e, std::size_t& cost) -> std::optional<Witness> {
    const auto reps = omega8_bounds(e.f, moment_report(e.f).mean_s, grid, opts);
    cost += 4 * grid.points().size();
    std::optional<Witness> w;
    for (const auto& rep : reps) {
      if (rep.numerical_error) throw std::runtime_error("eighth-root combination lost its real value");
      if (rep.first_violation && (!w || *rep.first_violation < w->r))
        w = Witness{"", *rep.first_violation, rep.first_violation_margin};
    }
    return w;
  });
}

TestVerdict multicomponent_suite(const AssociateSet& set, const ChecklistParams& params) {
  TestVerdict v;
  v.criterion = "multicomponent";
  const BoundReport rep = multicomponent_bound(set.base(), params.multi_widths, params.multi_weights,
                                               params.imaginary_grid,
                                               {.keep_curve = false, .stop_at_first_violation = true});
  v.cost = params.imaginary_grid.points().size();
  if (rep.first_violation) {
    v.detected = true;
    v.witness = Witness{set.entries.front().tag.label(), *rep.first_violation, rep.first_violation_margin};
  }
  return v;
}

TestVerdict run_criterion(const CriterionId& id, const AssociateSet& set, const ChecklistParams& params) {
  if (set.entries.empty()) throw std::invalid_argument("empty associate set");
  if (!criterion_supports(id, set.base().dim()))
    throw std::invalid_argument("criterion " + id.name() + " is not defined in dimension " +
                                std::to_string(to_int(set.base().dim())));
  TestVerdict v;
  switch (id.kind) {
    case CriterionKind::Maximality: v = maximality_suite(set, params.maximality_grid); break;
    case CriterionKind::EvenMoments: v = even_moments_suite(set); break;
    case CriterionKind::OddMomentSign: v = odd_moment_suite(set); break;
    case CriterionKind::Toeplitz: v = toeplitz_suite(set, id.order, params.toeplitz_grid); break;
    case CriterionKind::Cosh:
    case CriterionKind::I0: v = analytic_suite(set, params.imaginary_grid); break;
    case CriterionKind::CoshCos: v = cosh_cos_suite(set, params.imaginary_grid); break;
    case CriterionKind::Omega8: v = omega8_suite(set, params.imaginary_grid); break;
    case CriterionKind::Multicomponent: v = multicomponent_suite(set, params); break;
  }
  v.criterion = id.name();
  return v;
}

std::vector<TestVerdict> run_checklist(const AssociateSet& set, std::vector<CriterionId> selection,
                                       const ChecklistParams& params) {
  params.validate();
  std::sort(selection.begin(), selection.end());
  selection.erase(std::unique(selection.begin(), selection.end()), selection.end());
  std::vector<TestVerdict> out;
  out.reserve(selection.size());
  for (const auto& id : selection) {
    out.push_back(run_criterion(id, set, params));
    if (params.early_exit && out.back().detected) break;
  }
  return out;
}

std::vector<TestVerdict> run_checklist(const GaussPoly& f, std::vector<CriterionId> selection,
                                       const ChecklistParams& params) {
  params.validate();
  return run_checklist(build_associates(f, params.b, params.qmax), std::move(selection), params);
}

std::vector<CriterionId> full_selection(Dim dim, const std::vector<int>& toeplitz_orders) {
  std::vector<CriterionId> sel{{CriterionKind::Maximality, 0},
                               {CriterionKind::EvenMoments, 0},
                               {CriterionKind::OddMomentSign, 0}};
  for (int n : toeplitz_orders) sel.push_back({CriterionKind::Toeplitz, n});
  for (CriterionKind k : {CriterionKind::Cosh, CriterionKind::I0, CriterionKind::CoshCos, CriterionKind::Omega8,
                          CriterionKind::Multicomponent})
    if (criterion_supports({k, 0}, dim)) sel.push_back({k, 0});
  return sel;
}

}  // namespace bochner
