// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "bochner/analytic.hpp"

namespace bochner {

std::size_t ExperimentStats::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no census column " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

std::size_t ExperimentStats::union_count(const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(column_index(n));
  std::size_t count = 0;
  for (const auto& row : rows) {
    if (row.ground_truth_positive) continue;
    if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return row.verdicts[i].detected; })) ++count;
  }
  return count;
}

std::size_t ExperimentStats::total_false_detections() const {
  std::size_t n = 0;
  for (const auto& [k, v] : false_detections) n += v;
  return n;
}

double ExperimentStats::rate(const std::string& key) const {
  const auto it = detections.find(key);
  if (it == detections.end()) throw std::out_of_range("no detection tally " + key);
  return phi_negative == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(phi_negative);
}

unsigned worker_count() {
  if (const char* env = std::getenv("BOCHNER_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> sphere_sample(std::uint64_t seed, std::size_t index, std::size_t dimension) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::mt19937_64 gen(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> c(dimension);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : c) {
      x = normal(gen);
      norm2 += x * x;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : c) x *= inv;
  return c;
}

namespace {

std::string b_suffix(double b) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "@b=%g", b);
  return buf;
}

struct Candidate {
  bool kept = false;  // passed the psi screen
  CensusRow row;
};

// Evaluates indices [first, last) on the worker pool; results land in index
// order. The exception of the lowest failing index, if any, is rethrown.
void evaluate_range(std::size_t first, std::size_t last, const std::function<Candidate(std::size_t)>& eval,
                    std::vector<Candidate>& out) {
  const std::size_t n = last - first;
  out.assign(n, {});
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        out[k] = eval(first + k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Folds kept candidates in index order until `target_negative` phi-negative
// rows have been collected.
void sample_until(ExperimentStats& stats, std::size_t target_negative, std::size_t max_draws,
                  const std::function<Candidate(std::size_t)>& eval) {
  if (target_negative == 0) throw std::invalid_argument("sample count must be at least 1");
  const std::size_t batch = 64 * static_cast<std::size_t>(worker_count());
  std::vector<Candidate> results;
  std::size_t index = 0;
  while (stats.phi_negative < target_negative) {
    if (index >= max_draws) throw std::runtime_error("draw limit reached before the target sample count");
    const std::size_t last = std::min(index + batch, max_draws);
    evaluate_range(index, last, eval, results);
    for (auto& c : results) {
      ++stats.draws;
      if (c.kept) {
        if (!c.row.ground_truth_positive) ++stats.phi_negative;
        stats.rows.push_back(std::move(c.row));
      }
      if (stats.phi_negative == target_negative) break;
    }
    index = last;
  }
}

void tally(ExperimentStats& stats) {
  stats.population = stats.rows.size();
  stats.both_positive = 0;
  stats.phi_negative = 0;
  for (const auto& col : stats.columns) {
    stats.detections[col] = 0;
    stats.false_detections[col] = 0;
  }
  for (const auto& row : stats.rows) {
    (row.ground_truth_positive ? stats.both_positive : stats.phi_negative)++;
    for (std::size_t i = 0; i < stats.columns.size(); ++i) {
      if (!row.verdicts[i].detected) continue;
      (row.ground_truth_positive ? stats.false_detections : stats.detections)[stats.columns[i]]++;
    }
  }
}

// First detection in the given associate order.
TestVerdict first_of(std::string name, const AssociateSet& set, const std::vector<std::optional<double>>& hits,
                     const std::vector<double>& margins, const std::vector<std::size_t>& order) {
  TestVerdict v;
  v.criterion = std::move(name);
  for (std::size_t i : order) {
    if (hits[i]) {
      v.detected = true;
      v.witness = Witness{set.entries[i].tag.label(), *hits[i], margins[i]};
      break;
    }
  }
  return v;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Per-associate first violations for one probe.
struct Probe {
  std::vector<std::optional<double>> hit;
  std::vector<double> margin;
  explicit Probe(std::size_t n) : hit(n), margin(n, 0.0) {}
};

Probe toeplitz_probe(const AssociateSet& set, int order, const RGrid& grid) {
  Probe p(set.entries.size());
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    const ToeplitzScan s = toeplitz_scan(set.entries[i].f, order, grid, {.stop_at_first_violation = true});
    if (s.first_violation) {
      p.hit[i] = s.first_violation;
      p.margin[i] = s.min_eig.back().second;
    }
  }
  return p;
}

void take(Probe& p, std::size_t i, const BoundReport& rep) {
  if (rep.first_violation && (!p.hit[i] || *rep.first_violation < *p.hit[i])) {
    p.hit[i] = rep.first_violation;
    p.margin[i] = rep.first_violation_margin;
  }
}

constexpr BoundOptions kScanOnly{.keep_curve = false, .stop_at_first_violation = true};

std::vector<double> padded(const std::vector<double>& c) {
  std::vector<double> out = c;
  out.resize(5, 0.0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Three-parameter grid.

ExperimentStats grid_census_3param(const Grid3Config& cfg) {
  if (cfg.alpha_steps <= 0 || cfg.beta_steps <= 0) throw std::invalid_argument("grid3 needs positive step counts");
  if (cfg.b_list.empty()) throw std::invalid_argument("grid3 needs at least one b");
  for (double b : cfg.b_list)
    if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
  cfg.imaginary_grid.validate();

  ExperimentStats stats;
  stats.campaign = "grid3";
  stats.dim = Dim::One;
  stats.columns.push_back("max_psi_psi2");
  for (double b : cfg.b_list) {
    const std::string s = b_suffix(b);
    stats.columns.push_back("conv8" + s);
    stats.columns.push_back("cosh_b2" + s);
    stats.columns.push_back("cosh_b4" + s);
  }

  const double da = std::numbers::pi / 90.0;
  const double db = std::numbers::pi / 45.0;
  auto eval = [&](std::size_t cell) {
    Candidate c;
    const int i = static_cast<int>(cell / cfg.beta_steps);
    const int j = static_cast<int>(cell % cfg.beta_steps);
    const double alpha = (i + cfg.alpha_offset) * da;
    const double beta = (j + cfg.beta_offset) * db;
    const std::vector<double> coeffs{std::cos(alpha), std::sin(alpha) * std::cos(beta),
                                     std::sin(alpha) * std::sin(beta)};
    const GaussPoly f = mix({Dim::One, coeffs, false});
    if (!is_nonneg(f).nonneg) return c;
    c.kept = true;
    c.row.index = cell;
    c.row.coeffs = padded(coeffs);
    c.row.ground_truth_positive = is_nonneg(exact_transform(f)).nonneg;

    c.row.verdicts.push_back(maximality_suite(build_associates(f, std::nullopt, 1)));
    c.row.verdicts.back().criterion = "max_psi_psi2";
    for (double b : cfg.b_list) {
      const std::string s = b_suffix(b);
      const AssociateSet full = build_associates(f, b, 2);
      const AssociateSet conv = full.subset({"psi_b", "psi_b2"});
      TestVerdict v8;
      for (const TestVerdict& v : {maximality_suite(conv), even_moments_suite(conv), odd_moment_suite(conv),
                                   analytic_suite(conv, cfg.imaginary_grid)}) {
        v8.cost += v.cost;
        if (v.detected && !v8.detected) {
          v8.detected = true;
          v8.witness = v.witness;
        }
      }
      v8.criterion = "conv8" + s;
      c.row.verdicts.push_back(std::move(v8));
      for (const char* label : {"psi_b2", "psi_b4"}) {
        TestVerdict v = analytic_suite(full.subset({label}), cfg.imaginary_grid);
        v.criterion = std::string("cosh_") + (label + 4) + s;
        c.row.verdicts.push_back(std::move(v));
      }
    }
    return c;
  };

  std::vector<Candidate> results;
  const std::size_t cells = static_cast<std::size_t>(cfg.alpha_steps) * cfg.beta_steps;
  evaluate_range(0, cells, eval, results);
  stats.draws = cells;
  for (auto& c : results)
    if (c.kept) stats.rows.push_back(std::move(c.row));
  tally(stats);

  // Rebels: phi-negative functions surviving double maximality.
  const std::size_t max_col = stats.column_index("max_psi_psi2");
  std::vector<std::string> conv_cols(stats.columns.begin() + 1, stats.columns.end());
  std::size_t any = 0;
  std::map<std::string, std::size_t> on_rebels;
  for (const auto& col : conv_cols) on_rebels[col] = 0;
  std::map<double, std::size_t> pair_union;
  stats.rebels = 0;
  for (const auto& row : stats.rows) {
    if (row.ground_truth_positive || row.verdicts[max_col].detected) continue;
    ++stats.rebels;
    bool hit = false;
    for (std::size_t i = 1; i < stats.columns.size(); ++i) {
      if (row.verdicts[i].detected) {
        ++on_rebels[stats.columns[i]];
        hit = true;
      }
    }
    if (hit) ++any;
    for (std::size_t k = 0; k < cfg.b_list.size(); ++k) {
      const std::size_t base = 1 + 3 * k;
      if (row.verdicts[base + 1].detected || row.verdicts[base + 2].detected) ++pair_union[cfg.b_list[k]];
    }
  }
  for (const auto& [col, n] : on_rebels) stats.detections["rebels:" + col] = n;
  for (double b : cfg.b_list) stats.detections["rebels:cosh_b2+cosh_b4" + b_suffix(b)] = pair_union[b];
  stats.detections["rebels:any"] = any;
  stats.detections["rebels"] = stats.rebels;
  return stats;
}

// ---------------------------------------------------------------------------
// Random five-component 1D mixes.

ExperimentStats random_census_1d(const Random1dConfig& cfg) {
  if (!(cfg.b > 0.0)) throw std::invalid_argument("b must be positive");
  for (double b : cfg.b_sweep)
    if (!(b > 0.0)) throw std::invalid_argument("b sweep values must be positive");
  cfg.toeplitz_grid.validate();
  cfg.imaginary_grid.validate();
  {
    ChecklistParams check;
    check.multi_widths = cfg.multi_widths;
    check.multi_weights = cfg.multi_weights;
    check.validate();
  }

  ExperimentStats stats;
  stats.campaign = "random1d";
  stats.dim = Dim::One;
  stats.columns = {"toeplitz3_all10",   "cosh_all10",     "toeplitz5_psi",          "toeplitz5_psi_psi2",
                   "toeplitz5_psi_psib", "toeplitz5_psi_psi2_psib_psib2", "toeplitz5_all10", "cosh_psi",
                   "cosh_cos_all10",    "omega8_all10",   "multicomponent_psi"};
  for (double b : cfg.b_sweep) stats.columns.push_back("toeplitz3_all10" + b_suffix(b));

  auto eval = [&](std::size_t index) {
    Candidate c;
    const std::vector<double> coeffs = sphere_sample(cfg.seed, index);
    const GaussPoly f = mix({Dim::One, coeffs, false});
    if (!is_nonneg(f).nonneg) return c;
    c.kept = true;
    c.row.index = index;
    c.row.coeffs = coeffs;
    c.row.ground_truth_positive = is_nonneg(exact_transform(f)).nonneg;

    const AssociateSet set = build_associates(f, cfg.b, 4);
    const std::size_t n = set.entries.size();
    const auto all = all_indices(n);
    const std::size_t ib = 5, ib2 = 6;  // psi_b, psi_b2

    const Probe t3 = toeplitz_probe(set, 3, cfg.toeplitz_grid);
    const Probe t5 = toeplitz_probe(set, 5, cfg.toeplitz_grid);
    Probe ch(n), cc(n), om(n);
    for (std::size_t i = 0; i < n; ++i) {
      const GaussPoly& g = set.entries[i].f;
      const double s = moment_report(g).mean_s;
      take(ch, i, cosh_bound(g, s, cfg.imaginary_grid, kScanOnly));
      const auto [sum, diff] = cosh_cos_bounds(g, s, cfg.imaginary_grid, kScanOnly);
      take(cc, i, sum);
      take(cc, i, diff);
      for (const auto& rep : omega8_bounds(g, s, cfg.imaginary_grid, kScanOnly)) {
        if (rep.numerical_error) throw std::runtime_error("eighth-root combination lost its real value");
        take(om, i, rep);
      }
    }
    auto& v = c.row.verdicts;
    v.push_back(first_of("toeplitz3_all10", set, t3.hit, t3.margin, all));
    v.push_back(first_of("cosh_all10", set, ch.hit, ch.margin, all));
    v.push_back(first_of("toeplitz5_psi", set, t5.hit, t5.margin, {0}));
    v.push_back(first_of("toeplitz5_psi_psi2", set, t5.hit, t5.margin, {0, 1}));
    v.push_back(first_of("toeplitz5_psi_psib", set, t5.hit, t5.margin, {0, ib}));
    v.push_back(first_of("toeplitz5_psi_psi2_psib_psib2", set, t5.hit, t5.margin, {0, 1, ib, ib2}));
    v.push_back(first_of("toeplitz5_all10", set, t5.hit, t5.margin, all));
    v.push_back(first_of("cosh_psi", set, ch.hit, ch.margin, {0}));
    v.push_back(first_of("cosh_cos_all10", set, cc.hit, cc.margin, all));
    v.push_back(first_of("omega8_all10", set, om.hit, om.margin, all));
    {
      TestVerdict m;
      m.criterion = "multicomponent_psi";
      const BoundReport rep = multicomponent_bound(f, cfg.multi_widths, cfg.multi_weights, cfg.imaginary_grid, kScanOnly);
      if (rep.first_violation) {
        m.detected = true;
        m.witness = Witness{"psi", *rep.first_violation, rep.first_violation_margin};
      }
      v.push_back(std::move(m));
    }
    for (double b : cfg.b_sweep) {
      TestVerdict sv = b == cfg.b ? v.front() : toeplitz_suite(build_associates(f, b, 4), 3, cfg.toeplitz_grid);
      sv.criterion = "toeplitz3_all10" + b_suffix(b);
      v.push_back(std::move(sv));
    }
    return c;
  };

  sample_until(stats, cfg.target_negative, cfg.max_draws, eval);
  tally(stats);

  // Union bookkeeping between the matrix test and the cosh test.
  const std::size_t it3 = stats.column_index("toeplitz3_all10");
  const std::size_t ich = stats.column_index("cosh_all10");
  const std::size_t icc = stats.column_index("cosh_cos_all10");
  std::size_t cosh_only = 0, t3_only = 0, both = 0, cc_on_rebels = 0;
  stats.rebels = 0;
  for (const auto& row : stats.rows) {
    if (row.ground_truth_positive) continue;
    const bool a = row.verdicts[it3].detected;
    const bool b = row.verdicts[ich].detected;
    if (a && b) ++both;
    if (a && !b) ++t3_only;
    if (b && !a) ++cosh_only;
    if (!a) ++stats.rebels;
    if (!a && !b && row.verdicts[icc].detected) ++cc_on_rebels;
  }
  stats.detections["cosh_after_toeplitz3"] = cosh_only;
  stats.detections["toeplitz3_after_cosh"] = t3_only;
  stats.detections["union_toeplitz3_cosh"] = stats.union_count({"toeplitz3_all10", "cosh_all10"});
  stats.detections["rebels"] = stats.rebels;
  stats.detections["rebels:cosh_cos"] = cc_on_rebels;
  return stats;
}

// ---------------------------------------------------------------------------
// Random five-component 2D mixes with the matching 1D comparison.

namespace {

ExperimentStats screened_psi_only(Dim dim, const Random2dConfig& cfg) {
  ExperimentStats stats;
  stats.campaign = dim == Dim::Two ? "random2d" : "random2d_1d";
  stats.dim = dim;
  for (int n : cfg.orders) stats.columns.push_back("toeplitz" + std::to_string(n) + "_psi");
  const std::string analytic = dim == Dim::Two ? "I0_psi" : "cosh_psi";
  stats.columns.push_back(analytic);

  auto eval = [&](std::size_t index) {
    Candidate c;
    const std::vector<double> coeffs = sphere_sample(cfg.seed, index);
    const GaussPoly f = mix({dim, coeffs, false});
    if (!is_nonneg(f).nonneg) return c;
    if (maximality_test(f).detected) return c;
    c.kept = true;
    c.row.index = index;
    c.row.coeffs = coeffs;
    c.row.ground_truth_positive = is_nonneg(exact_transform(f)).nonneg;
    const AssociateSet set = build_associates(f, std::nullopt, 0);
    for (int n : cfg.orders) {
      TestVerdict v = toeplitz_suite(set, n, cfg.toeplitz_grid);
      v.criterion = "toeplitz" + std::to_string(n) + "_psi";
      c.row.verdicts.push_back(std::move(v));
    }
    TestVerdict a = analytic_suite(set, cfg.imaginary_grid);
    a.criterion = analytic;
    c.row.verdicts.push_back(std::move(a));
    return c;
  };
  sample_until(stats, cfg.target_negative, cfg.max_draws, eval);
  tally(stats);
  stats.rebels = stats.phi_negative - stats.union_count(stats.columns);
  return stats;
}

}  // namespace

Random2dResult random_census_2d(const Random2dConfig& cfg) {
  if (cfg.orders.empty()) throw std::invalid_argument("random2d needs at least one Toeplitz order");
  for (int n : cfg.orders)
    if (n < 2 || n > 16) throw std::invalid_argument("Toeplitz order must lie in [2, 16]");
  cfg.toeplitz_grid.validate();
  cfg.imaginary_grid.validate();
  return {screened_psi_only(Dim::Two, cfg), screened_psi_only(Dim::One, cfg)};
}

// ---------------------------------------------------------------------------

GaussPoly figure1_psi() {
  return GaussPoly(Dim::One, 0.5, {0.718081, -0.064879, -0.0685793, 0.0269736, 0.00119983});
}

Figure1Report figure1_case(const RGrid& toeplitz_grid, const RGrid& imaginary_grid) {
  const GaussPoly psi = figure1_psi();
  const GaussPoly phi = exact_transform(psi);
  const MomentReport m = moment_report(psi);
  BoundReport cosh = cosh_bound(psi, m.mean_s, imaginary_grid);
  return Figure1Report{psi,
                       phi,
                       is_nonneg(phi),
                       m,
                       std::move(cosh.margin_curve),
                       cosh.first_violation,
                       toeplitz_scan(psi, 3, toeplitz_grid),
                       toeplitz_scan(psi, 4, toeplitz_grid)};
}

}  // namespace bochner
