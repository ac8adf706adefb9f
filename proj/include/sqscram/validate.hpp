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

// Cross-checks of the closed forms against the Fock-space oracle on a parameter grid.

#include <cstddef>
#include <vector>

#include "sqscram/params.hpp"

namespace sqscram {

struct ValidationGrid {
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  std::vector<double> alpha;
  std::vector<double> theta;
  std::vector<double> phi;

  std::size_t size() const {
    return lambda1.size() * lambda2.size() * alpha.size() * theta.size() * phi.size();
  }
  /// Points in lexicographic order (lambda1, lambda2, alpha, theta, phi).
  std::vector<ModelParams> points() const;
};

/// lambda1 in {0, 0.25, .., 1.5}, lambda2 in {0, 0.5}, alpha in {0, 0.5, 1, 2},
/// theta and phi in {0, pi/8, pi/4, 3pi/8, pi/2}.
ValidationGrid standard_grid();

/// Keeps k evenly spaced values per axis; k = 1 keeps the middle value, k <= 0 keeps all.
ValidationGrid thin_grid(const ValidationGrid& g, int k);

/// |a - b| / max(|b|, 1e-2): relative error, absolute error near zero.
double normalized_error(double a, double b);

struct ValidationResult {
  double max_q_error = 0.0;
  double max_u_error = 0.0;
  double max_moment_error = 0.0;
  std::size_t points = 0;
  std::size_t max_dim = 0;
};

/// Q and U under the appendix convention, moments under the phase-space convention.
/// Propagates TailError and ConvergenceError from the oracle.
ValidationResult validate_grid(const ValidationGrid& g, const NumericsConfig& cfg);

}  // namespace sqscram
