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

// Classical Fisher information of general-dyne detection on the evolved Gaussian state.
//
// The POVM seed is a pure Gaussian state with zero mean and covariance diag(z, 1/z)/2;
// z = 1 is heterodyne, z -> 0 and z -> infinity approach q and p homodyne. The outcome
// distribution is Gaussian with mean X and covariance Sigma = sigma + sigma_m.

#include <utility>

#include "sqscram/linalg2.hpp"
#include "sqscram/params.hpp"

namespace sqscram {

class GeneralDyneSetting {
 public:
  /// Throws std::invalid_argument unless z is finite and > 0.
  explicit GeneralDyneSetting(double z);

  double z() const noexcept { return z_; }
  Mat2 seed_covariance() const { return Mat2::diag(0.5 * z_, 0.5 / z_); }

 private:
  double z_;
};

struct CFIMatrix {
  Mat2 F;
};

Mat2 outcome_covariance(const ModelParams& p, const GeneralDyneSetting& s);

/// F_jk = dX_j^T Sigma^-1 dX_k + (1/2) Tr[Sigma^-1 dSigma_j Sigma^-1 dSigma_k].
CFIMatrix cfi_matrix(const ModelParams& p, const GeneralDyneSetting& s);

/// QFI of the state whose moments evolve_moments describes, with unit-normalized generators:
/// qfim_closed at theta' = pi/4 - theta, divided by 4. The two parametrizations differ by a
/// fixed phase rotation of the output, which leaves the information unchanged.
Mat2 phase_space_qfim(const ModelParams& p);

/// Tr[F^-1]; throws SingularError when det F < sing_tol * ||F||_F^2.
double c_g(const CFIMatrix& f, double sing_tol = 1e-12);

struct OptimizedSetting {
  double theta = 0.0;  // wrapped to (-pi/2, pi/2]
  double phi = 0.0;    // wrapped to (-pi/2, pi/2]
  double z = 1.0;
  double c_g = 0.0;
  int evaluations = 0;
};

struct OptimizerOptions {
  int theta_points = 12;    // over [0, pi)
  int phi_points = 9;       // over [0, pi/2]
  int log_z_points = 13;    // over [-6, 6]
  double log_z_limit = 6.0;
  double size_tol = 1e-7;  // simplex size in (theta, phi, log z)
  int max_evaluations = 10000;
};

/// Minimizes C_g over (theta, phi, z): coarse grid, then Nelder-Mead refinement in
/// (theta, phi, log z). Throws OptimizationError if the refinement exhausts its budget.
OptimizedSetting optimize_setting(double lambda1, double lambda2, double alpha,
                                  const OptimizerOptions& opts = {});

/// Optimized Fisher information at theta = 0, phi = pi/4, z = e^{2 lambda2} in closed form:
///   F11 = 1 + tanh^2 l + 2a^2 (1 + tanh l)
///   F22 = 2a^2 e^{3l} / cosh l + cosh^2(2l) / cosh^2 l,   F12 = 0.
Mat2 optimal_fisher_closed(double alpha, double lambda1);

/// Large-alpha expansion (1 + e^{-4 l})^2 / (4 alpha^2). Requires alpha > 0.
double cg_asymptotic(double alpha, double lambda1);

/// Leading large-alpha term of Tr[optimal_fisher_closed^-1]: (1 + e^{-2 l})^2 / (4 alpha^2).
double cg_leading_order(double alpha, double lambda1);

/// Large-alpha band for C_H / C_g: (1/(4(1+e^{-4l})), 3/(8(1+e^{-4l}))).
std::pair<double, double> holevo_ratio_band(double alpha, double lambda1);

}  // namespace sqscram
