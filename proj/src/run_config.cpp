// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/run_config.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "bochner/analytic.hpp"
#include "bochner/criteria.hpp"
#include "bochner/experiments.hpp"
#include "bochner/moments.hpp"
#include "bochner/report.hpp"
#include "bochner/toeplitz.hpp"

namespace bochner {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Grid3: return "grid3";
    case Command::Random1d: return "random1d";
    case Command::Random2d: return "random2d";
    case Command::Fig1: return "fig1";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  for (Command c : {Command::Analyze, Command::Grid3, Command::Random1d, Command::Random2d, Command::Fig1})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown command '" + s + "' (expected analyze, grid3, random1d, random2d or fig1)");
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) bad(std::string(what) + " must be finite");
}

void require_positive(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!(x > 0.0) || !std::isfinite(x)) bad(std::string(what) + " must be positive, got " + format_double(x));
}

void require_unused(bool unused, const std::string& field, Command c) {
  if (!unused) bad(field + " is not used by the " + to_string(c) + " command");
}

}  // namespace

void RunConfig::resolve() {
  if (dim != 1 && dim != 2) bad("dim must be 1 or 2, got " + std::to_string(dim));
  if (!(rstep > 0.0) || !(rmin > 0.0) || !(rmax >= rmin) || !std::isfinite(rmax))
    bad("Toeplitz grid needs 0 < rmin <= rmax and rstep > 0");
  if (!(imag_rstep > 0.0) || !(imag_rmax >= 0.0) || !std::isfinite(imag_rmax))
    bad("imaginary grid needs imag_rmax >= 0 and imag_rstep > 0");
  if (qmax < 0 || qmax > 8) bad("qmax must lie in [0, 8]");
  for (int o : orders)
    if (o < 2 || o > 16) bad("Toeplitz orders must lie in [2, 16], got " + std::to_string(o));
  require_positive(b, "b");
  require_positive(b_sweep, "b sweep values");
  require_positive(multi_widths, "multicomponent widths");
  require_positive(multi_weights, "multicomponent weights");
  require_finite(coeffs, "coefficients");
  require_finite(poly, "polynomial coefficients");
  if (out.empty()) bad("output directory must not be empty");

  const bool is_analyze = command == Command::Analyze;
  const bool is_random = command == Command::Random1d || command == Command::Random2d;
  if (!is_analyze) {
    require_unused(coeffs.empty() && poly.empty() && !width, "a function (coeffs/poly/width)", command);
    require_unused(criteria.empty(), "criteria", command);
  }
  if (!is_random) {
    require_unused(!seed, "seed", command);
    require_unused(!n, "n", command);
  }
  if (command != Command::Random1d) require_unused(b_sweep.empty(), "b_sweep", command);
  if (command != Command::Analyze && command != Command::Random1d)
    require_unused(multi_widths.empty() && multi_weights.empty(), "multicomponent weights", command);
  if (command != Command::Analyze && command != Command::Random2d) require_unused(orders.empty(), "orders", command);
  if (command == Command::Random2d || command == Command::Fig1) require_unused(b.empty(), "b", command);
  if (command != Command::Analyze && dim != 1) bad(to_string(command) + " fixes the dimension; drop --dim");

  switch (command) {
    case Command::Analyze: {
      const bool has_poly = !poly.empty() || width;
      if (has_poly == !coeffs.empty()) bad("analyze needs exactly one of coeffs or (width, poly)");
      if (has_poly && (!width || !(*width > 0.0))) bad("a raw polynomial needs a positive width");
      if (!coeffs.empty()) {
        if (coeffs.size() > static_cast<std::size_t>(kMaxBasisIndex))
          bad("at most " + std::to_string(kMaxBasisIndex) + " basis coefficients are supported");
        bool nonzero = false;
        for (double c : coeffs) nonzero |= c != 0.0;
        if (!nonzero) bad("basis coefficients are all zero");
      }
      if (orders.empty()) orders = {3, 5};
      if (b.empty()) b = {1.0};
      if (b.size() != 1) bad("analyze takes a single b");
      if (multi_widths.empty() && multi_weights.empty()) {
        multi_widths = {1.0, 0.5};
        multi_weights = {0.5, 0.5};
      }
      const Dim d = dim_from_int(dim);
      for (const auto& name : criteria) {
        const CriterionId id = CriterionId::parse(name);
        if (!criterion_supports(id, d)) bad("criterion " + name + " is not defined in dimension " + std::to_string(dim));
      }
      break;
    }
    case Command::Grid3:
      if (b.empty()) b = {2.0, 1.0, 0.5};
      break;
    case Command::Random1d:
      if (b.empty()) b = {1.0};
      if (b.size() != 1) bad("random1d takes a single b; use b_sweep for the sensitivity study");
      if (b_sweep.empty()) b_sweep = {0.2, 0.5, 1.0, 2.0, 5.0};
      if (multi_widths.empty() && multi_weights.empty()) {
        multi_widths = {1.0, 0.5};
        multi_weights = {0.5, 0.5};
      }
      if (!seed) seed = 1;
      if (!n) n = 22000;
      break;
    case Command::Random2d:
      if (orders.empty()) orders = {5, 8, 9, 10};
      if (!seed) seed = 2;
      if (!n) n = 10127;
      break;
    case Command::Fig1: break;
  }
  if (n && *n == 0) bad("n must be at least 1");
  if (multi_widths.size() != multi_weights.size()) bad("multicomponent widths and weights differ in length");
  double wsum = 0.0;
  for (double w : multi_weights) wsum += w;
  if (wsum > 1.0 + 1e-12) bad("multicomponent weights must sum to at most 1");
}

json to_json(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["dim"] = c.dim;
  j["coeffs"] = c.coeffs;
  j["normalized"] = c.normalized;
  j["width"] = c.width ? json(*c.width) : json(nullptr);
  j["poly"] = c.poly;
  j["criteria"] = c.criteria;
  j["early_exit"] = c.early_exit;
  j["qmax"] = c.qmax;
  j["orders"] = c.orders;
  j["b"] = c.b;
  j["b_sweep"] = c.b_sweep;
  j["multi_widths"] = c.multi_widths;
  j["multi_weights"] = c.multi_weights;
  j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  j["n"] = c.n ? json(*c.n) : json(nullptr);
  j["rmin"] = c.rmin;
  j["rmax"] = c.rmax;
  j["rstep"] = c.rstep;
  j["imag_rmax"] = c.imag_rmax;
  j["imag_rstep"] = c.imag_rstep;
  j["alpha_offset"] = c.alpha_offset;
  j["beta_offset"] = c.beta_offset;
  j["out"] = c.out;
  return j;
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) bad("configuration must be a JSON object");
  static const std::set<std::string> known = {
      "command", "dim",  "coeffs", "normalized", "width", "poly",  "criteria", "early_exit",
      "qmax",    "orders", "b",    "b_sweep",    "multi_widths", "multi_weights", "seed", "n",
      "rmin",    "rmax", "rstep", "imag_rmax",  "imag_rstep", "alpha_offset", "beta_offset", "out"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) bad("unknown configuration key '" + k + "'");
  RunConfig c;
  try {
    if (!j.contains("command")) bad("configuration lacks 'command'");
    c.command = command_from_string(j.at("command").get<std::string>());
    auto opt = [&](const char* key, auto& field) {
      if (j.contains(key) && !j.at(key).is_null()) j.at(key).get_to(field);
    };
    opt("dim", c.dim);
    opt("coeffs", c.coeffs);
    opt("normalized", c.normalized);
    if (j.contains("width") && !j.at("width").is_null()) c.width = j.at("width").get<double>();
    opt("poly", c.poly);
    opt("criteria", c.criteria);
    opt("early_exit", c.early_exit);
    opt("qmax", c.qmax);
    opt("orders", c.orders);
    opt("b", c.b);
    opt("b_sweep", c.b_sweep);
    opt("multi_widths", c.multi_widths);
    opt("multi_weights", c.multi_weights);
    if (j.contains("seed") && !j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n") && !j.at("n").is_null()) c.n = j.at("n").get<std::size_t>();
    opt("rmin", c.rmin);
    opt("rmax", c.rmax);
    opt("rstep", c.rstep);
    opt("imag_rmax", c.imag_rmax);
    opt("imag_rstep", c.imag_rstep);
    opt("alpha_offset", c.alpha_offset);
    opt("beta_offset", c.beta_offset);
    opt("out", c.out);
  } catch (const json::exception& e) {
    bad(std::string("malformed configuration: ") + e.what());
  }
  return c;
}

namespace {

RGrid toeplitz_grid(const RunConfig& c) { return {c.rmin, c.rmax, c.rstep}; }
RGrid imaginary_grid(const RunConfig& c) { return {0.0, c.imag_rmax, c.imag_rstep}; }

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  return os;
}

void write_json(const std::filesystem::path& p, const json& j) {
  auto os = open_out(p);
  os << j.dump(2) << '\n';
}

json phi_block(const GaussPoly& psi) {
  const GaussPoly phi = exact_transform(psi);
  const NonnegResult sign = is_nonneg(phi);
  json j{{"psi", to_json(psi)}, {"phi", to_json(phi)}, {"phi_nonneg", sign.nonneg}};
  j["phi_witness_s"] = sign.witness_r() ? json(*sign.witness_r()) : json(nullptr);
  return j;
}

json run_analyze(const RunConfig& c, const std::filesystem::path& dir) {
  const Dim d = dim_from_int(c.dim);
  const GaussPoly psi = c.coeffs.empty() ? GaussPoly(d, *c.width, c.poly) : mix({d, c.coeffs, c.normalized});
  if (psi.is_zero()) bad("the function is identically zero");

  ChecklistParams params;
  params.b = c.b.front();
  params.qmax = c.qmax;
  params.toeplitz_grid = toeplitz_grid(c);
  params.imaginary_grid = imaginary_grid(c);
  params.multi_widths = c.multi_widths;
  params.multi_weights = c.multi_weights;
  params.early_exit = c.early_exit;
  std::vector<CriterionId> sel;
  if (c.criteria.empty())
    sel = full_selection(d, c.orders);
  else
    for (const auto& s : c.criteria) sel.push_back(CriterionId::parse(s));

  const auto verdicts = run_checklist(psi, sel, params);
  json stats = phi_block(psi);
  stats["psi_nonneg"] = is_nonneg(psi).nonneg;
  stats["moments"] = to_json(moment_report(psi));
  bool any = false;
  for (const auto& v : verdicts) any |= v.detected;
  stats["detected"] = any;
  json per = json::array();
  for (const auto& v : verdicts) per.push_back(to_json(v));

  for (int n : c.orders) {
    const ToeplitzScan s = toeplitz_scan(psi, n, params.toeplitz_grid);
    auto os = open_out(dir / ("curve_toeplitz" + std::to_string(n) + ".csv"));
    write_curve_csv(os, "r", "lambda_min", s.min_eig);
  }
  const double mean = moment_report(psi).mean_s;
  const BoundReport rep =
      d == Dim::One ? cosh_bound(psi, mean, params.imaginary_grid) : i0_bound(psi, mean, params.imaginary_grid);
  auto os = open_out(dir / (d == Dim::One ? "curve_cosh.csv" : "curve_I0.csv"));
  write_curve_csv(os, "r", "margin", rep.margin_curve);
  return {{"stats", stats}, {"per_criterion", per}};
}

json run_fig1(const RunConfig& c, const std::filesystem::path& dir) {
  const Figure1Report r = figure1_case(toeplitz_grid(c), imaginary_grid(c));
  json stats = phi_block(r.psi);
  stats["moments"] = to_json(r.moments);
  stats["phi0"] = r.phi.at_origin();
  auto first = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  stats["cosh_first_violation"] = first(r.cosh_first_violation);
  stats["toeplitz3_first_violation"] = first(r.order3.first_violation);
  stats["toeplitz4_first_violation"] = first(r.order4.first_violation);
  json per = json::object();
  per["cosh"] = {{"detected", r.cosh_first_violation.has_value()}, {"r", first(r.cosh_first_violation)}};
  per["toeplitz3"] = {{"detected", r.order3.first_violation.has_value()}, {"r", first(r.order3.first_violation)}};
  per["toeplitz4"] = {{"detected", r.order4.first_violation.has_value()}, {"r", first(r.order4.first_violation)}};
  {
    auto os = open_out(dir / "fig1_cosh_margin.csv");
    write_curve_csv(os, "r", "margin", r.cosh_margin);
  }
  {
    auto os = open_out(dir / "fig1_toeplitz3.csv");
    write_curve_csv(os, "r", "lambda_min", r.order3.min_eig);
  }
  {
    auto os = open_out(dir / "fig1_toeplitz4.csv");
    write_curve_csv(os, "r", "lambda_min", r.order4.min_eig);
  }
  return {{"stats", stats}, {"per_criterion", per}};
}

json campaign_block(const ExperimentStats& s, const std::filesystem::path& csv) {
  auto os = open_out(csv);
  write_census_csv(os, s);
  return {{"stats", stats_json(s)}, {"per_criterion", per_criterion_json(s)}};
}

}  // namespace

json run(RunConfig c) {
  c.resolve();
  const auto t0 = std::chrono::steady_clock::now();
  const std::filesystem::path dir(c.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());

  json body;
  switch (c.command) {
    case Command::Analyze: body = run_analyze(c, dir); break;
    case Command::Fig1: body = run_fig1(c, dir); break;
    case Command::Grid3: {
      Grid3Config g;
      g.b_list = c.b;
      g.alpha_offset = c.alpha_offset;
      g.beta_offset = c.beta_offset;
      g.imaginary_grid = imaginary_grid(c);
      body = campaign_block(grid_census_3param(g), dir / "census.csv");
      break;
    }
    case Command::Random1d: {
      Random1dConfig r;
      r.target_negative = *c.n;
      r.seed = *c.seed;
      r.b = c.b.front();
      r.b_sweep = c.b_sweep;
      r.toeplitz_grid = toeplitz_grid(c);
      r.imaginary_grid = imaginary_grid(c);
      r.multi_widths = c.multi_widths;
      r.multi_weights = c.multi_weights;
      body = campaign_block(random_census_1d(r), dir / "census.csv");
      break;
    }
    case Command::Random2d: {
      Random2dConfig r;
      r.target_negative = *c.n;
      r.seed = *c.seed;
      r.orders = c.orders;
      r.toeplitz_grid = toeplitz_grid(c);
      r.imaginary_grid = imaginary_grid(c);
      const Random2dResult res = random_census_2d(r);
      body = campaign_block(res.two_d, dir / "census_2d.csv");
      const json one = campaign_block(res.one_d, dir / "census_1d.csv");
      body["stats_1d"] = one["stats"];
      body["per_criterion_1d"] = one["per_criterion"];
      break;
    }
  }
  json summary;
  summary["config"] = to_json(c);
  for (auto& [k, v] : body.items()) summary[k] = v;
  summary["timings"] = {
      {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
      {"threads", worker_count()}};
  write_json(dir / "summary.json", summary);
  return summary;
}

}  // namespace bochner
