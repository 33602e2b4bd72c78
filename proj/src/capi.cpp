// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/bochner.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <set>
#include <stdexcept>
#include <string>

#include "bochner/criteria.hpp"
#include "bochner/gauss_poly.hpp"
#include "bochner/moments.hpp"
#include "bochner/report.hpp"
#include "bochner/run_config.hpp"

struct bochner_func {
  bochner::GaussPoly f;
};

namespace {

thread_local std::string g_last_error;

bochner_status fail(bochner_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps exceptions from the core onto status codes.
template <class Body>
bochner_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return BOCHNER_OK;
  } catch (const std::invalid_argument& e) {
    return fail(BOCHNER_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(BOCHNER_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(BOCHNER_INVALID_ARGUMENT, std::string("JSON: ") + e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(BOCHNER_IO_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BOCHNER_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    const std::string what = e.what();
    if (what.rfind("cannot write", 0) == 0 || what.rfind("cannot create", 0) == 0)
      return fail(BOCHNER_IO_ERROR, what);
    return fail(BOCHNER_NUMERIC_ERROR, what);
  } catch (...) {
    return fail(BOCHNER_INTERNAL_ERROR, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* bochner_version(void) { return "1.0.0"; }

const char* bochner_last_error(void) { return g_last_error.c_str(); }

bochner_status bochner_func_from_basis(int dim, const double* coeffs, size_t n, int normalized, bochner_func** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(coeffs, "coeffs");
    bochner::BasisMix m{bochner::dim_from_int(dim), std::vector<double>(coeffs, coeffs + n), normalized != 0};
    *out = new bochner_func{bochner::mix(m)};
  });
}

bochner_status bochner_func_from_poly(int dim, double width, const double* p, size_t n, bochner_func** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(p, "p");
    *out = new bochner_func{bochner::GaussPoly(bochner::dim_from_int(dim), width, std::vector<double>(p, p + n))};
  });
}

void bochner_func_free(bochner_func* f) { delete f; }

bochner_status bochner_func_get(const bochner_func* f, int* dim, double* width, double* p, size_t cap, size_t* n) {
  return guarded([&] {
    require(f, "f");
    const auto c = f->f.coeffs();
    if (dim) *dim = bochner::to_int(f->f.dim());
    if (width) *width = f->f.width();
    if (n) *n = c.size();
    if (cap > 0) require(p, "p");
    for (size_t i = 0; i < std::min(cap, c.size()); ++i) p[i] = c[i];
  });
}

bochner_status bochner_func_eval(const bochner_func* f, double r, double* value) {
  return guarded([&] {
    require(f, "f");
    require(value, "value");
    *value = bochner::eval(f->f, r);
  });
}

bochner_status bochner_func_eval_imag(const bochner_func* f, double r, double* value) {
  return guarded([&] {
    require(f, "f");
    require(value, "value");
    if (!(r >= 0.0)) throw std::invalid_argument("r must be nonnegative");
    *value = bochner::eval_imag(f->f, r);
  });
}

bochner_status bochner_func_transform(const bochner_func* f, bochner_func** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = new bochner_func{bochner::exact_transform(f->f)};
  });
}

bochner_status bochner_func_is_nonneg(const bochner_func* f, int* nonneg, double* witness_r) {
  return guarded([&] {
    require(f, "f");
    require(nonneg, "nonneg");
    const bochner::NonnegResult r = bochner::is_nonneg(f->f);
    *nonneg = r.nonneg ? 1 : 0;
    if (witness_r) *witness_r = r.witness_r().value_or(-1.0);
  });
}

bochner_status bochner_func_mean_s(const bochner_func* f, double* mu1, double* mean_s) {
  return guarded([&] {
    require(f, "f");
    const bochner::MomentReport m = bochner::moment_report(f->f);
    if (mu1) *mu1 = m.mu1;
    if (mean_s) *mean_s = m.mean_s;
  });
}

bochner_status bochner_analyze(const bochner_func* f, const char* options_json, char** result_json) {
  return guarded([&] {
    require(f, "f");
    require(result_json, "result_json");
    nlohmann::json opts = options_json ? nlohmann::json::parse(options_json) : nlohmann::json::object();
    if (!opts.is_object()) throw std::invalid_argument("options must be a JSON object");
    static const std::set<std::string> known = {"criteria", "orders", "b",         "qmax",       "rmin",
                                                "rmax",     "rstep",  "imag_rmax", "imag_rstep", "early_exit"};
    for (const auto& [k, v] : opts.items())
      if (!known.count(k)) throw std::invalid_argument("unknown analyze option '" + k + "'");

    bochner::ChecklistParams params;
    params.b = opts.value("b", 1.0);
    params.qmax = opts.value("qmax", 4);
    params.toeplitz_grid = {opts.value("rmin", 0.025), opts.value("rmax", 3.5), opts.value("rstep", 0.025)};
    params.imaginary_grid = {0.0, opts.value("imag_rmax", 6.0), opts.value("imag_rstep", 0.01)};
    params.early_exit = opts.value("early_exit", false);
    const auto orders = opts.value("orders", std::vector<int>{3, 5});
    std::vector<bochner::CriterionId> sel;
    if (opts.contains("criteria")) {
      for (const auto& s : opts.at("criteria").get<std::vector<std::string>>())
        sel.push_back(bochner::CriterionId::parse(s));
    } else {
      sel = bochner::full_selection(f->f.dim(), orders);
    }
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : bochner::run_checklist(f->f, sel, params)) out.push_back(bochner::to_json(v));
    *result_json = dup_string(out.dump());
  });
}

bochner_status bochner_run(const char* config_json, char** summary_json) {
  return guarded([&] {
    require(config_json, "config_json");
    const nlohmann::json j = nlohmann::json::parse(config_json);
    const nlohmann::json summary = bochner::run(bochner::run_config_from_json(j));
    if (summary_json) *summary_json = dup_string(summary.dump(2));
  });
}

void bochner_string_free(char* s) { std::free(s); }

}  // extern "C"
