// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// bochner-scan: necessary-condition tests for nonnegative Fourier transforms.
// Exit codes: 0 success, 2 invalid input, 3 numerical or I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bochner/bochner.h"

namespace {

using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitFailure = 3;

struct Flags {
  std::string config_path;
  int dim = 1;
  std::vector<double> coeffs;
  bool normalized = false;
  std::optional<double> width;
  std::vector<double> poly;
  std::vector<std::string> criteria;
  bool early_exit = false;
  std::optional<int> qmax;
  std::vector<int> orders;
  std::vector<double> b;
  std::vector<double> b_sweep;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<double> rmin, rmax, rstep, imag_rmax, imag_rstep;
  std::string out = "out";
};

json build_config(const std::string& command, const Flags& f) {
  json j{{"command", command}, {"out", f.out}};
  if (f.dim != 1) j["dim"] = f.dim;
  if (!f.coeffs.empty()) j["coeffs"] = f.coeffs;
  if (f.normalized) j["normalized"] = true;
  if (f.width) j["width"] = *f.width;
  if (!f.poly.empty()) j["poly"] = f.poly;
  if (!f.criteria.empty()) j["criteria"] = f.criteria;
  if (f.early_exit) j["early_exit"] = true;
  if (f.qmax) j["qmax"] = *f.qmax;
  if (!f.orders.empty()) j["orders"] = f.orders;
  if (!f.b.empty()) j["b"] = f.b;
  if (!f.b_sweep.empty()) j["b_sweep"] = f.b_sweep;
  if (f.seed) j["seed"] = *f.seed;
  if (f.n) j["n"] = *f.n;
  if (f.rmin) j["rmin"] = *f.rmin;
  if (f.rmax) j["rmax"] = *f.rmax;
  if (f.rstep) j["rstep"] = *f.rstep;
  if (f.imag_rmax) j["imag_rmax"] = *f.imag_rmax;
  if (f.imag_rstep) j["imag_rstep"] = *f.imag_rstep;
  return j;
}

void print_summary(const json& s) {
  const std::string cmd = s["config"]["command"];
  std::cout << cmd << ": results in " << s["config"]["out"].get<std::string>() << "\n";
  if (cmd == "analyze") {
    for (const auto& v : s["per_criterion"]) {
      std::cout << "  " << v["criterion"].get<std::string>() << ": ";
      if (v["detected"].get<bool>())
        std::cout << "detected (" << v["witness"]["associate"].get<std::string>() << " at r = " << v["witness"]["r"]
                  << ")\n";
      else
        std::cout << "no detection\n";
    }
    std::cout << "  verdict: "
              << (s["stats"]["detected"].get<bool>() ? "transform cannot be nonnegative" : "no detection") << "\n";
    return;
  }
  if (cmd == "fig1") {
    std::cout << "  <s> = " << s["stats"]["moments"]["mean_s"] << ", phi(0) = " << s["stats"]["phi0"] << "\n";
    for (const auto& [k, v] : s["per_criterion"].items())
      std::cout << "  " << k << ": " << (v["detected"].get<bool>() ? "detected" : "no detection") << "\n";
    return;
  }
  auto block = [](const json& stats, const json& per) {
    std::cout << "  population " << stats["population"] << ", both positive " << stats["both_positive"]
              << ", phi negative " << stats["phi_negative"] << ", rebels " << stats["rebels"] << "\n";
    for (const auto& [k, v] : per.items()) {
      char rate[32];
      std::snprintf(rate, sizeof rate, "%.1f%%", 100.0 * v["rate"].get<double>());
      std::cout << "  " << k << ": " << v["detections"] << " (" << rate << ")\n";
    }
  };
  block(s["stats"], s["per_criterion"]);
  if (s.contains("stats_1d")) {
    std::cout << "1D comparison:\n";
    block(s["stats_1d"], s["per_criterion_1d"]);
  }
}

int execute(const json& config) {
  char* summary = nullptr;
  const bochner_status st = bochner_run(config.dump().c_str(), &summary);
  if (st != BOCHNER_OK) {
    std::cerr << "error: " << bochner_last_error() << "\n";
    return st == BOCHNER_INVALID_ARGUMENT ? kExitInvalid : kExitFailure;
  }
  const json s = json::parse(summary);
  bochner_string_free(summary);
  print_summary(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Necessary-condition tests for nonnegative Fourier transforms of Gaussian-polynomial functions"};
  app.set_version_flag("--version", std::string(bochner_version()));
  Flags f;
  app.add_option("--config", f.config_path, "Replay a configuration (summary.json or a bare config object)");
  app.require_subcommand(0, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", f.out, "Output directory")->capture_default_str();
    sub->add_option("--rmin", f.rmin, "Toeplitz grid start (default 0.025)");
    sub->add_option("--rmax", f.rmax, "Toeplitz grid end (default 3.5)");
    sub->add_option("--rstep", f.rstep, "Toeplitz grid step (default 0.025)");
    sub->add_option("--imag-rmax", f.imag_rmax, "Imaginary-axis grid end (default 6)");
    sub->add_option("--imag-rstep", f.imag_rstep, "Imaginary-axis grid step (default 0.01)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Run the criterion checklist on one function");
  analyze->add_option("--dim", f.dim, "Transform dimension (1 or 2)")->capture_default_str();
  analyze->add_option("--coeffs", f.coeffs, "Basis coefficients c0,c1,...")->delimiter(',');
  analyze->add_flag("--normalized", f.normalized, "Rescale the coefficients to unit norm");
  analyze->add_option("--width", f.width, "Gaussian width a of a raw polynomial");
  analyze->add_option("--poly", f.poly, "Raw polynomial coefficients p0,p1,... in r^2")->delimiter(',');
  analyze->add_option("--criteria", f.criteria, "Criteria to run (default: all)")->delimiter(',');
  analyze->add_flag("--early-exit", f.early_exit, "Stop at the first detection");
  analyze->add_option("--qmax", f.qmax, "Highest derivative order of the associates (default 4)");
  analyze->add_option("--orders", f.orders, "Toeplitz orders (default 3,5)")->delimiter(',');
  analyze->add_option("--b", f.b, "Convolution width (default 1)")->delimiter(',');
  common(analyze);

  CLI::App* grid3 = app.add_subcommand("grid3", "Three-parameter grid census");
  grid3->add_option("--b", f.b, "Convolution widths (default 2,1,0.5)")->delimiter(',');
  common(grid3);

  CLI::App* random1d = app.add_subcommand("random1d", "Random five-component 1D campaign");
  random1d->add_option("--n", f.n, "Number of phi-negative functions (default 22000)");
  random1d->add_option("--seed", f.seed, "Generator seed (default 1)");
  random1d->add_option("--b", f.b, "Convolution width of the associates (default 1)")->delimiter(',');
  random1d->add_option("--b-sweep", f.b_sweep, "Widths for the sensitivity study")->delimiter(',');
  common(random1d);

  CLI::App* random2d = app.add_subcommand("random2d", "Random five-component 2D campaign with 1D comparison");
  random2d->add_option("--n", f.n, "Number of phi-negative functions (default 10127)");
  random2d->add_option("--seed", f.seed, "Generator seed (default 2)");
  random2d->add_option("--orders", f.orders, "Toeplitz orders (default 5,8,9,10)")->delimiter(',');
  common(random2d);

  CLI::App* fig1 = app.add_subcommand("fig1", "The eight-component example with its margin curves");
  common(fig1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (!f.config_path.empty()) {
    if (app.get_subcommands().size() > 0) {
      std::cerr << "error: --config replays a stored run and takes no subcommand\n";
      return kExitInvalid;
    }
    std::ifstream is(f.config_path);
    if (!is) {
      std::cerr << "error: cannot read " << f.config_path << "\n";
      return kExitInvalid;
    }
    json doc;
    try {
      doc = json::parse(is);
    } catch (const json::exception& e) {
      std::cerr << "error: " << f.config_path << " is not valid JSON: " << e.what() << "\n";
      return kExitInvalid;
    }
    return execute(doc.contains("config") ? doc["config"] : doc);
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitInvalid;
  }
  return execute(build_config(app.get_subcommands().front()->get_name(), f));
}
