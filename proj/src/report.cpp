// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0

#include "bochner/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bochner {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const GaussPoly& f) {
  return {{"dim", to_int(f.dim())},
          {"a", f.width()},
          {"p", std::vector<double>(f.coeffs().begin(), f.coeffs().end())}};
}

GaussPoly gauss_poly_from_json(const json& j) {
  try {
    return GaussPoly(dim_from_int(j.at("dim").get<int>()), j.at("a").get<double>(),
                     j.at("p").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed function object: ") + e.what());
  }
}

json to_json(const TestVerdict& v) {
  json j{{"criterion", v.criterion}, {"detected", v.detected}, {"cost", v.cost}};
  if (v.witness)
    j["witness"] = {{"associate", v.witness->associate}, {"r", v.witness->r}, {"margin", v.witness->margin}};
  else
    j["witness"] = nullptr;
  return j;
}

json to_json(const MomentReport& m) {
  return {{"mu0", m.mu0}, {"mu1", m.mu1}, {"mean_s", m.mean_s}, {"method", to_string(m.method)}};
}

json stats_json(const ExperimentStats& s) {
  return {{"campaign", s.campaign},   {"dim", to_int(s.dim)},          {"draws", s.draws},
          {"population", s.population}, {"both_positive", s.both_positive}, {"phi_negative", s.phi_negative},
          {"rebels", s.rebels}};
}

json per_criterion_json(const ExperimentStats& s) {
  json out = json::object();
  for (const auto& [key, n] : s.detections) {
    json e{{"detections", n}, {"rate", s.phi_negative ? static_cast<double>(n) / s.phi_negative : 0.0}};
    const auto fd = s.false_detections.find(key);
    e["false_detections"] = fd == s.false_detections.end() ? json(nullptr) : json(fd->second);
    out[key] = std::move(e);
  }
  return out;
}

void write_census_csv(std::ostream& os, const ExperimentStats& s) {
  os << "index,c0,c1,c2,c3,c4,ground_truth_positive";
  for (const auto& c : s.columns) os << ',' << c << ',' << c << "_witness";
  os << '\n';
  for (const auto& row : s.rows) {
    if (row.coeffs.size() != 5 || row.verdicts.size() != s.columns.size())
      throw std::logic_error("census row does not match the column layout");
    os << row.index;
    for (double c : row.coeffs) os << ',' << format_double(c);
    os << ',' << (row.ground_truth_positive ? 1 : 0);
    for (const auto& v : row.verdicts) os << ',' << (v.detected ? 1 : 0) << ',' << v.witness_string();
    os << '\n';
  }
}

void write_curve_csv(std::ostream& os, const std::string& x_name, const std::string& y_name,
                     const std::vector<std::pair<double, double>>& points) {
  os << x_name << ',' << y_name << '\n';
  for (const auto& [x, y] : points) os << format_double(x) << ',' << format_double(y) << '\n';
}

}  // namespace bochner
