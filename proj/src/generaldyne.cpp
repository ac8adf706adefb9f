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

#include "sqscram/generaldyne.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "sqscram/bounds.hpp"
#include "sqscram/errors.hpp"
#include "sqscram/gaussian.hpp"

namespace sqscram {

GeneralDyneSetting::GeneralDyneSetting(double z) : z_(z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("GeneralDyneSetting: z must be finite and > 0");
  }
}

Mat2 outcome_covariance(const ModelParams& p, const GeneralDyneSetting& s) {
  return evolve_moments(p).cov + s.seed_covariance();
}

CFIMatrix cfi_matrix(const ModelParams& p, const GeneralDyneSetting& s) {
  const Mat2 sigma_inv = outcome_covariance(p, s).inverse();
  const MomentDerivatives d = moment_derivatives(p);

  double f[2][2];
  for (int j = 0; j < 2; ++j) {
    for (int k = j; k < 2; ++k) {
      const double mean_term = dot(d.mean[j], sigma_inv * d.mean[k]);
      const double cov_term = 0.5 * (sigma_inv * d.cov[j] * sigma_inv * d.cov[k]).trace();
      f[j][k] = mean_term + cov_term;
    }
  }
  return {Mat2::symmetric(f[0][0], f[0][1], f[1][1])};
}

Mat2 phase_space_qfim(const ModelParams& p) {
  return 0.25 * qfim_closed(p.with_theta(0.25 * std::numbers::pi - p.theta()));
}

double c_g(const CFIMatrix& f, double sing_tol) {
  if (!(f.F.det() >= sing_tol * f.F.frobenius_sq())) {
    throw SingularError("c_g: Fisher information matrix is singular");
  }
  return f.F.inverse().trace();
}

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_half_period(double angle) {
  // Into (-pi/2, pi/2], period pi.
  double r = std::remainder(angle, kPi);
  if (r <= -0.5 * kPi) r += kPi;
  return r;
}

struct Objective {
  double lambda1;
  double lambda2;
  double alpha;
  int evaluations = 0;

  double operator()(double theta, double phi, double log_z) {
    ++evaluations;
    try {
      const ModelParams p(lambda1, lambda2, alpha, theta, phi);
      const double v = c_g(cfi_matrix(p, GeneralDyneSetting(std::exp(log_z))));
      return std::isfinite(v) && v > 0.0 ? v : std::numeric_limits<double>::max();
    } catch (const SingularError&) {
      return std::numeric_limits<double>::max();
    }
  }
};

double gsl_objective(const gsl_vector* x, void* params) {
  auto* obj = static_cast<Objective*>(params);
  return (*obj)(gsl_vector_get(x, 0), gsl_vector_get(x, 1), gsl_vector_get(x, 2));
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

}  // namespace

OptimizedSetting optimize_setting(double lambda1, double lambda2, double alpha,
                                  const OptimizerOptions& opts) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("optimize_setting: alpha must be >= 0");
  if (opts.theta_points < 1 || opts.phi_points < 2 || opts.log_z_points < 2) {
    throw std::invalid_argument("optimize_setting: grid too small");
  }
  Objective obj{lambda1, lambda2, alpha};

  const double theta_step = kPi / opts.theta_points;
  const double phi_step = 0.5 * kPi / (opts.phi_points - 1);
  const double log_z_step = 2.0 * opts.log_z_limit / (opts.log_z_points - 1);
  double best = std::numeric_limits<double>::max();
  double start[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < opts.theta_points; ++i) {
    for (int j = 0; j < opts.phi_points; ++j) {
      for (int k = 0; k < opts.log_z_points; ++k) {
        const double th = i * theta_step;
        const double ph = j * phi_step;
        const double lz = -opts.log_z_limit + k * log_z_step;
        const double v = obj(th, ph, lz);
        if (v < best) {
          best = v;
          start[0] = th;
          start[1] = ph;
          start[2] = lz;
        }
      }
    }
  }
  if (best == std::numeric_limits<double>::max()) {
    throw OptimizationError("optimize_setting: Fisher information singular on the whole grid");
  }

  gsl_set_error_handler_off();
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(3));
  std::unique_ptr<gsl_vector, VectorDeleter> steps(gsl_vector_alloc(3));
  for (std::size_t i = 0; i < 3; ++i) gsl_vector_set(x.get(), i, start[i]);
  gsl_vector_set(steps.get(), 0, 0.5 * theta_step);
  gsl_vector_set(steps.get(), 1, 0.5 * phi_step);
  gsl_vector_set(steps.get(), 2, 0.5 * log_z_step);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3));
  gsl_multimin_function fn{&gsl_objective, 3, &obj};
  gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), steps.get());

  bool converged = false;
  while (obj.evaluations < opts.max_evaluations) {
    const int status = gsl_multimin_fminimizer_iterate(minimizer.get());
    if (status != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(minimizer.get());
    if (gsl_multimin_test_size(size, opts.size_tol) == GSL_SUCCESS) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw OptimizationError("optimize_setting: simplex refinement did not converge within " +
                            std::to_string(opts.max_evaluations) + " evaluations");
  }

  const gsl_vector* xm = gsl_multimin_fminimizer_x(minimizer.get());
  OptimizedSetting out;
  out.theta = wrap_half_period(gsl_vector_get(xm, 0));
  out.phi = wrap_half_period(gsl_vector_get(xm, 1));
  out.z = std::exp(gsl_vector_get(xm, 2));
  out.c_g = gsl_multimin_fminimizer_minimum(minimizer.get());
  out.evaluations = obj.evaluations;
  return out;
}

Mat2 optimal_fisher_closed(double alpha, double lambda1) {
  const double a2 = alpha * alpha;
  const double t = std::tanh(lambda1);
  const double ch = std::cosh(lambda1);
  const double c2 = std::cosh(2.0 * lambda1);
  return Mat2::diag(1.0 + t * t + 2.0 * a2 * (1.0 + t),
                    2.0 * a2 * std::exp(3.0 * lambda1) / ch + c2 * c2 / (ch * ch));
}

double cg_asymptotic(double alpha, double lambda1) {
  if (!(alpha > 0.0)) throw DomainError("cg_asymptotic: alpha must be > 0");
  const double g = 1.0 + std::exp(-4.0 * lambda1);
  return g * g / (4.0 * alpha * alpha);
}

double cg_leading_order(double alpha, double lambda1) {
  if (!(alpha > 0.0)) throw DomainError("cg_leading_order: alpha must be > 0");
  const double g = 1.0 + std::exp(-2.0 * lambda1);
  return g * g / (4.0 * alpha * alpha);
}

std::pair<double, double> holevo_ratio_band(double alpha, double lambda1) {
  if (!(alpha > 0.0)) throw DomainError("holevo_ratio_band: alpha must be > 0");
  const double g = 1.0 + std::exp(-4.0 * lambda1);
  return {1.0 / (4.0 * g), 3.0 / (8.0 * g)};
}

}  // namespace sqscram
