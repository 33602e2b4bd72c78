// Copyright 2026 The bochner-scan Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV serialization of functions, verdicts and census tables.
// Floating-point values are written with 17 significant digits so that files
// round-trip exactly.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bochner/experiments.hpp"
#include "bochner/gauss_poly.hpp"
#include "bochner/verdict.hpp"

namespace bochner {

nlohmann::json to_json(const GaussPoly& f);
GaussPoly gauss_poly_from_json(const nlohmann::json& j);  // throws std::invalid_argument

nlohmann::json to_json(const TestVerdict& v);
nlohmann::json to_json(const MomentReport& m);

/// {draws, population, both_positive, phi_negative, rebels}.
nlohmann::json stats_json(const ExperimentStats& s);
/// {key: {detections, rate, false_detections}} for every column and derived tally.
nlohmann::json per_criterion_json(const ExperimentStats& s);

/// index,c0..c4,ground_truth_positive, then <column>,<column>_witness per column.
void write_census_csv(std::ostream& os, const ExperimentStats& s);

/// Two-column curve with the given header names.
void write_curve_csv(std::ostream& os, const std::string& x_name, const std::string& y_name,
                     const std::vector<std::pair<double, double>>& points);

/// %.17g
std::string format_double(double v);

}  // namespace bochner
