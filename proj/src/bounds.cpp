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

#include "sqscram/bounds.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "sqscram/errors.hpp"

namespace sqscram {

Mat2 qfim_closed(const ModelParams& p) {
  const double a2 = p.alpha() * p.alpha();
  const double l1 = p.lambda1();
  const double th = p.theta();
  const double ph = p.phi();
  const double sh2 = std::sinh(2.0 * l1);

  const double q11 = 16.0 * a2 + 8.0;
  const double q12 = 16.0 * a2 * std::cos(2.0 * th) * sh2 * std::sin(2.0 * ph) +
                     8.0 * (2.0 * a2 + 1.0) * std::cos(2.0 * ph);
  const double s2p = std::sin(2.0 * ph);
  const double q22 =
      2.0 * (8.0 * a2 * std::sin(2.0 * th) * std::sinh(4.0 * l1) * s2p * s2p +
             8.0 * a2 * std::cos(2.0 * th) * sh2 * std::sin(4.0 * ph) -
             2.0 * (4.0 * a2 + 1.0) * sh2 * sh2 * std::cos(4.0 * ph) +
             (4.0 * a2 + 1.0) * std::cosh(4.0 * l1) + 4.0 * a2 + 3.0);
  return Mat2::symmetric(q11, q12, q22);
}

Mat2 uhlmann_closed(const ModelParams& p) {
  const double a2 = p.alpha() * p.alpha();
  const double l1 = p.lambda1();
  const double u12 = 8.0 * std::sin(2.0 * p.phi()) *
                     (2.0 * a2 * std::sin(2.0 * p.theta()) * std::sinh(2.0 * l1) +
                      (2.0 * a2 + 1.0) * std::cosh(2.0 * l1));
  return Mat2::antisymmetric(u12);
}

InfoMatrices info_closed(const ModelParams& p) { return {qfim_closed(p), uhlmann_closed(p)}; }

bool is_singular(const Mat2& q, double sing_tol) {
  return !(q.det() >= sing_tol * q.frobenius_sq());
}

ScalarBounds scalar_bounds(const Mat2& q, const Mat2& u, double sing_tol) {
  ScalarBounds out;
  // det of a 2x2 antisymmetric matrix is U12^2; take it directly.
  const double det_u = u.b * u.b;
  const double trace_q = q.trace();
  out.T_I = std::sqrt(2.0 * det_u) / trace_q;
  if (det_u > sing_tol * q.frobenius_sq()) out.C = 1.0 / det_u;
  if (is_singular(q, sing_tol)) return out;

  const double det_q = q.det();
  out.S = 1.0 / det_q;
  out.R = std::sqrt(det_u / det_q);
  out.C_Q = trace_q / det_q;
  out.bracket_T = *out.C_Q * (1.0 + out.T_I);
  out.bracket_R = *out.C_Q * (1.0 + *out.R);
  return out;
}

double cq_optimal_closed(double alpha, double lambda1) {
  const double a2 = alpha * alpha;
  return 0.125 * (1.0 / (1.0 + 2.0 * a2) +
                  2.0 / (1.0 + (1.0 + 4.0 * a2) * std::cosh(4.0 * lambda1) +
                         4.0 * a2 * std::sinh(4.0 * lambda1)));
}

double asymptotic_R(double alpha, double lambda1) {
  if (!(alpha > 0.0)) throw DomainError("asymptotic_R: alpha must be > 0");
  const double sc = std::sinh(lambda1) * std::cosh(lambda1);
  return 1.0 - (2.0 / (alpha * alpha)) * std::exp(-4.0 * lambda1) * sc * sc;
}

double asymptotic_T(double lambda1) {
  return 1.0 / (std::numbers::sqrt2 * std::cosh(2.0 * lambda1));
}

namespace {

void require_split(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("stepwise bound: gamma must lie in (0, 1)");
  }
}

void require_sloppiness(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw SingularError("stepwise bound: sloppiness must be finite and positive");
  }
}

double sep_value(double qkk, double s, double gamma) {
  return s * qkk / gamma + 1.0 / (qkk * (1.0 - gamma));
}

}  // namespace

StepwisePair stepwise_bounds(const Mat2& q, double sloppiness, double gamma) {
  require_split(gamma);
  require_sloppiness(sloppiness);
  return {sep_value(q.d, sloppiness, gamma), sep_value(q.a, sloppiness, gamma)};
}

double StepwiseBounds::c_sep1(double gamma) const {
  require_split(gamma);
  return sep_value(q22, sloppiness, gamma);
}

double StepwiseBounds::c_sep2(double gamma) const {
  require_split(gamma);
  return sep_value(q11, sloppiness, gamma);
}

StepwiseBounds stepwise_optimal(const Mat2& q, double sloppiness) {
  require_sloppiness(sloppiness);
  const double root_s = std::sqrt(sloppiness);
  auto gamma_for = [&](double qkk) { return qkk * root_s / (1.0 + qkk * root_s); };
  auto min_for = [&](double qkk) { return 1.0 / qkk + qkk * sloppiness + 2.0 * root_s; };

  StepwiseBounds b;
  b.q11 = q.a;
  b.q22 = q.d;
  b.sloppiness = sloppiness;
  b.gamma_star_1 = gamma_for(q.d);
  b.gamma_star_2 = gamma_for(q.a);
  b.c_sep_min_1 = min_for(q.d);
  b.c_sep_min_2 = min_for(q.a);

#ifndef NDEBUG
  for (int i = 1; i < 64; ++i) {
    const double g = i / 64.0;
    assert(b.c_sep_min_1 <= b.c_sep1(g) * (1.0 + 1e-12));
    assert(b.c_sep_min_2 <= b.c_sep2(g) * (1.0 + 1e-12));
  }
#endif
  return b;
}

double weighted_cq(const Mat2& q, const WeightMatrix& w, double sing_tol) {
  if (is_singular(q, sing_tol)) {
    throw SingularError("weighted_cq: QFI matrix is singular");
  }
  return (w.matrix() * q.inverse()).trace();
}

}  // namespace sqscram
