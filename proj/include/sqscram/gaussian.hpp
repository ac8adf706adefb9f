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

#include <array>

#include "sqscram/linalg2.hpp"
#include "sqscram/params.hpp"

namespace sqscram {

/// First moments X = (<q>, <p>) and covariance matrix of a single-mode state.
/// q = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2).
struct GaussianState {
  Vec2 mean;
  Mat2 cov;
};

/// Closed-form moments of U2 V U1 |alpha e^{i theta}>.
GaussianState evolve_moments(const ModelParams& p);

/// Linear maps whose product M = second_squeeze * rotation * first_squeeze takes the
/// probe moments (coherent_input_mean, identity/2) to evolve_moments: X = M X_in,
/// sigma = M sigma_in M^T.
struct SymplecticFactors {
  Mat2 first_squeeze;   // diag(e^{lambda1}, e^{-lambda1})
  Mat2 rotation;        // [[cos phi, sin phi], [-sin phi, cos phi]]
  Mat2 second_squeeze;  // diag(e^{lambda2}, e^{-lambda2})

  Mat2 composite() const { return second_squeeze * rotation * first_squeeze; }
};

SymplecticFactors symplectic_factors(const ModelParams& p);

/// sqrt2 * alpha * (cos theta, -sin theta)
Vec2 coherent_input_mean(double alpha, double theta);

/// Analytic partial derivatives of evolve_moments with respect to (lambda1, lambda2).
struct MomentDerivatives {
  std::array<Vec2, 2> mean;
  std::array<Mat2, 2> cov;
};

MomentDerivatives moment_derivatives(const ModelParams& p);

}  // namespace sqscram
