// Copyright 2026 The sqscram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// One-point summary of every bound, with CSV and JSON serialization.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqscram/params.hpp"

namespace sqscram {

struct BoundReport {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<double> z;

  double Q11 = 0.0;
  double Q12 = 0.0;
  double Q22 = 0.0;
  double U12 = 0.0;
  std::optional<double> S;
  std::optional<double> C;
  std::optional<double> R;
  double T_I = 0.0;
  std::optional<double> C_Q;
  std::optional<double> bracket_T;
  std::optional<double> bracket_R;
  std::optional<double> C_sep_min_1;
  std::optional<double> C_sep_min_2;
  std::optional<double> gamma_star_1;
  std::optional<double> gamma_star_2;
  std::optional<double> C_g;
  std::optional<double> C_W;  // Tr[W Q^-1] when a weight was supplied
  bool singular = false;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct ReportOptions {
  std::optional<double> z;  // general-dyne seed; C_g is filled only when set
  std::optional<WeightMatrix> weight;
  double sing_tol = 1e-12;
};

/// Closed-form report for one parameter point. Singular points are reported in-band.
BoundReport make_report(const ModelParams& p, const ReportOptions& opts = {});

/// Shortest round-trip decimal, or `digits` significant digits when digits > 0.
std::string format_number(double v, int digits = 0);

/// Column names in output order.
const std::vector<std::string>& report_columns();

/// Comma-separated header line, no trailing newline.
std::string csv_header();
/// Empty cells stand for absent values; `singular` is written as 0 or 1.
std::string csv_row(const BoundReport& r, int digits = 0);
/// Inverse of csv_row for a row written under csv_header(). Throws std::invalid_argument.
BoundReport parse_csv_row(std::string_view line);

/// JSON object with the same keys as the CSV columns; absent values are null.
std::string to_json(const BoundReport& r, int digits = 0);
std::string to_json(const std::vector<BoundReport>& rows, int digits = 0);
BoundReport report_from_json(std::string_view text);

}  // namespace sqscram
