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

// Closed-form information matrices, scalar precision bounds and stepwise bounds.
//
// All quantities are per probe copy. Q and U follow the normalization of the closed
// forms below (Q11 = 16 alpha^2 + 8); see README ("Conventions") for how that relates
// to the overlap formula on the oracle's derivative states.

#include <optional>

#include "sqscram/linalg2.hpp"
#include "sqscram/params.hpp"

namespace sqscram {

struct InfoMatrices {
  Mat2 Q;  // symmetric, positive semidefinite
  Mat2 U;  // antisymmetric
};

Mat2 qfim_closed(const ModelParams& p);
Mat2 uhlmann_closed(const ModelParams& p);
InfoMatrices info_closed(const ModelParams& p);

/// det Q < sing_tol * ||Q||_F^2
bool is_singular(const Mat2& q, double sing_tol);

/// Scalar quantifiers for one parameter point.
///
/// Fields that need Q^-1 are empty when Q is singular (the unscrambled, sloppy regime).
/// `C` is empty when det U vanishes (compatible parameters, infinite incompatibility).
struct ScalarBounds {
  std::optional<double> S;  // sloppiness 1/det Q
  std::optional<double> C;  // incompatibility 1/det U
  std::optional<double> R;  // quantumness sqrt(det U / det Q)
  double T_I = 0.0;         // sqrt(2 det U) / Tr Q
  std::optional<double> C_Q;
  std::optional<double> bracket_T;  // C_Q (1 + T_I)
  std::optional<double> bracket_R;  // C_Q (1 + R)

  bool singular() const { return !S.has_value(); }
};

ScalarBounds scalar_bounds(const Mat2& q, const Mat2& u, double sing_tol);

/// Tr Q / det Q at theta = phi = pi/4 in closed form:
///   (1/8) [1/(1 + 2a^2) + 2/(1 + (1 + 4a^2) cosh 4l + 4a^2 sinh 4l)].
/// This display is often labelled as the sloppiness; it is the SLD bound C_Q.
double cq_optimal_closed(double alpha, double lambda1);

/// Large-alpha expansion of R: 1 - (2/alpha^2) e^{-4 l} sinh^2 l cosh^2 l. Requires alpha > 0.
double asymptotic_R(double alpha, double lambda1);

/// Large-alpha limit of T_I: 1 / (sqrt2 cosh 2 lambda1).
double asymptotic_T(double lambda1);

struct StepwisePair {
  double sep1;  // lambda1 first, then lambda2
  double sep2;  // lambda2 first, then lambda1
};

/// C_sep1 = S Q22/gamma + 1/(Q22 (1-gamma)), C_sep2 = S Q11/gamma + 1/(Q11 (1-gamma)).
/// Throws DomainError unless 0 < gamma < 1, SingularError unless S is finite and > 0.
StepwisePair stepwise_bounds(const Mat2& q, double sloppiness, double gamma);

/// Stepwise bounds with the copy split gamma tuned per strategy.
struct StepwiseBounds {
  double q11 = 0.0;
  double q22 = 0.0;
  double sloppiness = 0.0;
  double gamma_star_1 = 0.0;
  double gamma_star_2 = 0.0;
  double c_sep_min_1 = 0.0;
  double c_sep_min_2 = 0.0;

  double c_sep1(double gamma) const;
  double c_sep2(double gamma) const;
};

/// Strategy 1 pairs with Q22 and strategy 2 with Q11:
///   gamma* = Q_kk sqrt S / (1 + Q_kk sqrt S),  C_sep_min = 1/Q_kk + Q_kk S + 2 sqrt S.
StepwiseBounds stepwise_optimal(const Mat2& q, double sloppiness);

/// Tr[W Q^-1]; throws SingularError when Q is singular.
double weighted_cq(const Mat2& q, const WeightMatrix& w, double sing_tol);

}  // namespace sqscram
