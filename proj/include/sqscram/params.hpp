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

#include <cstddef>

#include "sqscram/linalg2.hpp"

namespace sqscram {

/// Physical inputs of the two-squeezing model with an intermediate phase scrambler.
///
/// The probe is a coherent state of real amplitude `alpha >= 0` and phase `theta`;
/// it is squeezed by `lambda1`, rotated by the scrambler phase `phi`, then squeezed
/// again by `lambda2`. Units: hbar = 1, vacuum quadrature variance 1/2.
///
/// Phases are not wrapped. All closed forms are 2*pi periodic in phi and pi periodic
/// in theta, which the tests check rather than enforce.
class ModelParams {
 public:
  /// Throws std::invalid_argument when alpha < 0 or any field is not finite.
  ModelParams(double lambda1, double lambda2, double alpha, double theta, double phi);

  double lambda1() const noexcept { return lambda1_; }
  double lambda2() const noexcept { return lambda2_; }
  double alpha() const noexcept { return alpha_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  ModelParams with_lambda1(double v) const { return {v, lambda2_, alpha_, theta_, phi_}; }
  ModelParams with_lambda2(double v) const { return {lambda1_, v, alpha_, theta_, phi_}; }
  ModelParams with_alpha(double v) const { return {lambda1_, lambda2_, v, theta_, phi_}; }
  ModelParams with_theta(double v) const { return {lambda1_, lambda2_, alpha_, v, phi_}; }
  ModelParams with_phi(double v) const { return {lambda1_, lambda2_, alpha_, theta_, v}; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double lambda1_;
  double lambda2_;
  double alpha_;
  double theta_;
  double phi_;
};

/// Truncation and tolerance settings for the Fock-space oracle and singularity tests.
struct NumericsConfig {
  std::size_t fock_dim = 256;
  double tail_tol = 1e-10;
  double sing_tol = 1e-12;
  double fd_step = 1e-5;
  /// Upper bound for adaptive dimension doubling.
  std::size_t max_fock_dim = 4096;
  bool adapt_dim = true;

  /// Throws std::invalid_argument unless fock_dim >= 4 and all tolerances are > 0.
  void validate() const;
};

NumericsConfig default_numerics();

/// Positive-definite 2x2 weight used by the weighted SLD bound Tr[W Q^-1].
class WeightMatrix {
 public:
  WeightMatrix() = default;  // identity
  /// Throws std::invalid_argument unless `w` is symmetric positive definite.
  explicit WeightMatrix(const Mat2& w);

  const Mat2& matrix() const noexcept { return w_; }

 private:
  Mat2 w_ = Mat2::identity();
};

}  // namespace sqscram
