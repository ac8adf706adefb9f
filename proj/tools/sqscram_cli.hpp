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

// Argument parsing helpers for the sqscram command-line tool.

#include <string>
#include <string_view>
#include <vector>

#include "sqscram/params.hpp"

namespace sqscram::cli {

/// A decimal number, or a multiple of pi written as [-][k][*]pi[/m], e.g. "3pi/8", "-pi/2".
/// Throws std::invalid_argument.
double parse_real(std::string_view text);

/// "a,b,c,d" row-major. Throws std::invalid_argument unless positive definite.
WeightMatrix parse_weight(std::string_view text);

enum class ScanAxis { kLambda1, kLambda2, kAlpha, kTheta, kPhi, kZ };

struct ScanSpec {
  ScanAxis axis = ScanAxis::kLambda1;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  /// start + i (stop - start) / (count - 1); the last point is exactly `stop`.
  double value(int i) const;
};

/// Throws std::invalid_argument for an unknown axis, count < 2 or start >= stop.
ScanSpec make_scan_spec(std::string_view axis, double start, double stop, int count);

/// `p` with the scanned field replaced; for kZ it is returned unchanged.
ModelParams with_axis(const ModelParams& p, ScanAxis axis, double v);

/// Replaces "--config PATH" (or "--config=PATH") by "--key=value" tokens read from the
/// file, placed right after the subcommand name so explicit flags still take precedence.
/// Lines are "key = value"; blank lines and lines starting with '#' are ignored.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

}  // namespace sqscram::cli
