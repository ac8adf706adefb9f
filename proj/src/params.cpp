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

#include "sqscram/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqscram {

ModelParams::ModelParams(double lambda1, double lambda2, double alpha, double theta, double phi)
    : lambda1_(lambda1), lambda2_(lambda2), alpha_(alpha), theta_(theta), phi_(phi) {
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2) || !std::isfinite(alpha) ||
      !std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("ModelParams: all fields must be finite");
  }
  if (alpha < 0.0) {
    throw std::invalid_argument("ModelParams: alpha must be >= 0, got " + std::to_string(alpha));
  }
}

void NumericsConfig::validate() const {
  if (fock_dim < 4) {
    throw std::invalid_argument("NumericsConfig: fock_dim must be >= 4");
  }
  if (!(tail_tol > 0.0) || !(sing_tol > 0.0) || !(fd_step > 0.0)) {
    throw std::invalid_argument("NumericsConfig: tolerances must be strictly positive");
  }
  if (max_fock_dim < fock_dim) {
    throw std::invalid_argument("NumericsConfig: max_fock_dim must be >= fock_dim");
  }
}

NumericsConfig default_numerics() { return NumericsConfig{}; }

WeightMatrix::WeightMatrix(const Mat2& w) : w_(w) {
  const double scale = std::fmax(max_abs_entry(w), 1.0);
  if (std::fabs(w.b - w.c) > 1e-12 * scale) {
    throw std::invalid_argument("WeightMatrix: matrix must be symmetric");
  }
  if (!(w.a > 0.0) || !(w.det() > 0.0)) {
    throw std::invalid_argument("WeightMatrix: matrix must be positive definite");
  }
}

}  // namespace sqscram
