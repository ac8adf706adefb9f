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

#include "sqscram/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace sqscram {

GaussianState evolve_moments(const ModelParams& p) {
  const double l1 = p.lambda1();
  const double l2 = p.lambda2();
  const double amp = std::numbers::sqrt2 * p.alpha();
  const double ct = std::cos(p.theta());
  const double st = std::sin(p.theta());
  const double cp = std::cos(p.phi());
  const double sp = std::sin(p.phi());

  GaussianState g;
  g.mean.x = amp * std::exp(l2) * (std::exp(l1) * ct * cp - std::exp(-l1) * st * sp);
  g.mean.y = -amp * std::exp(-l2) * (std::exp(-l1) * st * cp + std::exp(l1) * ct * sp);

  const double dq = 0.5 * std::exp(2.0 * l2) * (std::exp(2.0 * l1) * cp * cp +
                                                std::exp(-2.0 * l1) * sp * sp);
  const double dp = 0.5 * std::exp(-2.0 * l2) * (std::exp(-2.0 * l1) * cp * cp +
                                                 std::exp(2.0 * l1) * sp * sp);
  const double dqp = -0.5 * std::sin(2.0 * p.phi()) * std::sinh(2.0 * l1);
  g.cov = Mat2::symmetric(dq, dqp, dp);
  return g;
}

SymplecticFactors symplectic_factors(const ModelParams& p) {
  const double cp = std::cos(p.phi());
  const double sp = std::sin(p.phi());
  return {Mat2::diag(std::exp(p.lambda1()), std::exp(-p.lambda1())),
          Mat2{cp, sp, -sp, cp},
          Mat2::diag(std::exp(p.lambda2()), std::exp(-p.lambda2()))};
}

Vec2 coherent_input_mean(double alpha, double theta) {
  return {std::numbers::sqrt2 * alpha * std::cos(theta),
          -std::numbers::sqrt2 * alpha * std::sin(theta)};
}

MomentDerivatives moment_derivatives(const ModelParams& p) {
  const double l1 = p.lambda1();
  const double l2 = p.lambda2();
  const double amp = std::numbers::sqrt2 * p.alpha();
  const double ct = std::cos(p.theta());
  const double st = std::sin(p.theta());
  const double cp = std::cos(p.phi());
  const double sp = std::sin(p.phi());
  const GaussianState g = evolve_moments(p);

  MomentDerivatives d;
  d.mean[0] = {amp * std::exp(l2) * (std::exp(l1) * ct * cp + std::exp(-l1) * st * sp),
               -amp * std::exp(-l2) * (-std::exp(-l1) * st * cp + std::exp(l1) * ct * sp)};
  d.mean[1] = {g.mean.x, -g.mean.y};

  const double ddq = std::exp(2.0 * l2) * (std::exp(2.0 * l1) * cp * cp -
                                           std::exp(-2.0 * l1) * sp * sp);
  const double ddp = std::exp(-2.0 * l2) * (std::exp(2.0 * l1) * sp * sp -
                                            std::exp(-2.0 * l1) * cp * cp);
  const double ddqp = -std::sin(2.0 * p.phi()) * std::cosh(2.0 * l1);
  d.cov[0] = Mat2::symmetric(ddq, ddqp, ddp);
  // lambda2 only rescales q by e^{lambda2} and p by e^{-lambda2}.
  d.cov[1] = Mat2::diag(2.0 * g.cov.a, -2.0 * g.cov.d);
  return d;
}

}  // namespace sqscram
