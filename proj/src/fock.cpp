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

#include "sqscram/fock.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sqscram/errors.hpp"
#include "sqscram/kernels.hpp"

namespace sqscram {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kUnitarityTol = 1e-9;
constexpr double kDoublingTol = 1e-8;

// w[n] = sqrt((n+1)(n+2)), the a^2 matrix element <n|a^2|n+2>.
std::vector<double> pair_weights(std::size_t dim) {
  std::vector<double> w(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    w[n] = std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + 2));
  }
  return w;
}

double relative_tail(const FockVector& v) {
  const double total = v.norm_sq();
  return total > 0.0 ? v.tail_mass() / total : 0.0;
}

void require_tail(const FockVector& v, const NumericsConfig& cfg, const char* what) {
  const double tail = relative_tail(v);
  if (!(tail < cfg.tail_tol)) {
    throw TailError(std::string(what) + ": relative tail mass exceeds tolerance at dim " + std::to_string(v.dim()),
                    v.dim(), tail);
  }
}

template <class Fn>
auto with_adaptive_dim(const NumericsConfig& cfg, Fn&& fn) {
  NumericsConfig local = cfg;
  for (;;) {
    try {
      return fn(local);
    } catch (const TailError&) {
      if (!cfg.adapt_dim || local.fock_dim * 2 > cfg.max_fock_dim) throw;
      local.fock_dim *= 2;
    }
  }
}

}  // namespace

FockVector FockVector::basis(std::size_t dim, std::size_t n) {
  FockVector v(dim);
  v[n] = 1.0;
  return v;
}

double FockVector::norm_sq() const { return kernels::norm_sq(amps_); }

double FockVector::norm() const { return std::sqrt(norm_sq()); }

// At least two levels, so a state supported on one parity cannot hide its tail.
std::size_t tail_start(std::size_t dim) {
  const std::size_t width = std::max<std::size_t>((dim + 7) / 8, 2);
  return width < dim ? dim - width : 0;
}

double FockVector::tail_mass() const {
  const std::size_t start = tail_start(dim());
  return kernels::norm_sq(std::span<const cplx>(amps_).subspan(start));
}

FockVector FockVector::resized(std::size_t dim) const {
  std::vector<cplx> out(dim);
  std::copy_n(amps_.begin(), std::min(dim, amps_.size()), out.begin());
  return FockVector(std::move(out));
}

FockVector& FockVector::operator*=(cplx s) {
  for (cplx& c : amps_) c *= s;
  return *this;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  kernels::caxpy(1.0, o.amps(), amps_);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  kernels::caxpy(-1.0, o.amps(), amps_);
  return *this;
}

cplx inner(const FockVector& x, const FockVector& y) { return kernels::cdot(x.amps(), y.amps()); }

FockConvention FockConvention::phase_space() {
  return {1.0, std::numbers::pi / 4.0, -1.0, 1.0};
}

SqueezePropagator::SqueezePropagator(std::size_t dim) : dim_(dim) {
  const std::vector<double> w = pair_weights(dim);
  for (std::size_t parity = 0; parity < 2; ++parity) {
    Block& b = blocks_[parity];
    b.parity = parity;
    b.size = (dim - parity + 1) / 2;
    if (b.size == 0) continue;

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(b.size));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(b.size > 0 ? b.size - 1 : 0));
    for (std::size_t k = 0; k + 1 < b.size; ++k) {
      sub[static_cast<Eigen::Index>(k)] = w[parity + 2 * k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("SqueezePropagator: tridiagonal eigensolver failed at dim " +
                             std::to_string(dim));
    }
    const Eigen::MatrixXd& v = solver.eigenvectors();
    b.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + b.size);
    b.vecs.resize(b.size * b.size);
    b.vecs_t.resize(b.size * b.size);
    for (std::size_t i = 0; i < b.size; ++i) {
      for (std::size_t k = 0; k < b.size; ++k) {
        const double x = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        b.vecs[i * b.size + k] = x;
        b.vecs_t[k * b.size + i] = x;
      }
    }
  }
}

FockVector SqueezePropagator::apply(const FockVector& state, double lambda) const {
  if (state.dim() != dim_) {
    throw std::invalid_argument("SqueezePropagator: dimension mismatch");
  }
  FockVector out(dim_);
  std::vector<cplx> sector;
  std::vector<cplx> modes;
  for (const Block& b : blocks_) {
    if (b.size == 0) continue;
    sector.resize(b.size);
    modes.resize(b.size);
    for (std::size_t k = 0; k < b.size; ++k) sector[k] = state[b.parity + 2 * k];
    kernels::real_matvec(b.vecs_t.data(), b.size, b.size, sector, modes);
    for (std::size_t k = 0; k < b.size; ++k) {
      modes[k] *= std::polar(1.0, -0.5 * lambda * b.eigenvalues[k]);
    }
    kernels::real_matvec(b.vecs.data(), b.size, b.size, modes, sector);
    for (std::size_t k = 0; k < b.size; ++k) out[b.parity + 2 * k] = sector[k];
  }
  return out;
}

std::shared_ptr<const SqueezePropagator> PropagatorCache::get(std::size_t dim) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(dim);
  if (it != cache_.end()) return it->second;
  auto prop = std::make_shared<const SqueezePropagator>(dim);
  cache_.emplace(dim, prop);
  return prop;
}

FockVector expmv_taylor(const FockVector& state, double lambda) {
  constexpr double kMaxStepNorm = 2.0;
  constexpr int kMaxTerms = 80;
  const std::size_t dim = state.dim();
  const std::vector<double> w = pair_weights(dim);

  double row_bound = 0.0;
  for (std::size_t n = 0; n < dim; ++n) {
    double r = (n + 2 < dim) ? w[n] : 0.0;
    if (n >= 2) r += w[n - 2];
    row_bound = std::max(row_bound, r);
  }
  const double total_norm = 0.5 * std::fabs(lambda) * row_bound;
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(total_norm / kMaxStepNorm)));
  const double h = lambda / static_cast<double>(steps);

  FockVector v = state;
  FockVector term(dim);
  FockVector next(dim);
  for (std::size_t s = 0; s < steps; ++s) {
    FockVector acc = v;
    term = v;
    bool converged = false;
    for (int k = 1; k <= kMaxTerms; ++k) {
      kernels::band2_apply(term.amps(), w, 1.0, 1.0, next.amps());
      const cplx scale = -0.5 * kI * h / static_cast<double>(k);
      for (std::size_t n = 0; n < dim; ++n) term[n] = scale * next[n];
      acc += term;
      if (term.norm_sq() <= 1e-34 * acc.norm_sq()) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("expmv_taylor: series did not converge");
    }
    v = std::move(acc);
  }
  return v;
}

FockVector coherent_state(double alpha, double theta, const NumericsConfig& cfg) {
  cfg.validate();
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("coherent_state: alpha must be finite and >= 0");
  }
  FockVector v(cfg.fock_dim);
  if (alpha == 0.0) {
    v[0] = 1.0;
    return v;
  }
  const double log_alpha = std::log(alpha);
  for (std::size_t n = 0; n < cfg.fock_dim; ++n) {
    const double nd = static_cast<double>(n);
    const double log_mag = -0.5 * alpha * alpha + nd * log_alpha - 0.5 * std::lgamma(nd + 1.0);
    v[n] = std::polar(std::exp(log_mag), nd * theta);
  }
  require_tail(v, cfg, "coherent_state");
  return v;
}

FockVector apply_G(const FockVector& state) {
  FockVector out(state.dim());
  const std::vector<double> w = pair_weights(state.dim());
  kernels::band2_apply(state.amps(), w, 1.0, 1.0, out.amps());
  return out;
}

FockVector apply_phase(const FockVector& state, double phi) {
  FockVector out(state.dim());
  for (std::size_t n = 0; n < state.dim(); ++n) {
    out[n] = state[n] * std::polar(1.0, -phi * static_cast<double>(n));
  }
  return out;
}

FockVector apply_generator(const FockVector& state, const FockConvention& conv) {
  if (conv.generator_phase == 0.0) {
    FockVector out = apply_G(state);
    if (conv.squeeze_sign != 1.0) out *= conv.squeeze_sign;
    return out;
  }
  FockVector out =
      apply_phase(apply_G(apply_phase(state, conv.generator_phase)), -conv.generator_phase);
  if (conv.squeeze_sign != 1.0) out *= conv.squeeze_sign;
  return out;
}

FockVector apply_squeeze(const FockVector& state, double lambda, const NumericsConfig& cfg,
                         const FockConvention& conv, PropagatorCache& cache) {
  if (lambda == 0.0) return state;
  const auto prop = cache.get(state.dim());
  const double signed_lambda = conv.squeeze_sign * lambda;
  FockVector out = conv.generator_phase == 0.0
                       ? prop->apply(state, signed_lambda)
                       : apply_phase(prop->apply(apply_phase(state, conv.generator_phase),
                                                 signed_lambda),
                                     -conv.generator_phase);
  const double before = state.norm();
  if (std::fabs(out.norm() - before) > kUnitarityTol * std::max(before, 1.0)) {
    throw ConvergenceError("apply_squeeze: propagation lost unitarity");
  }
  require_tail(out, cfg, "apply_squeeze");
  return out;
}

FockVector apply_squeeze(const FockVector& state, double lambda, const NumericsConfig& cfg) {
  PropagatorCache cache;
  return apply_squeeze(state, lambda, cfg, FockConvention::literal(), cache);
}

FockVector output_state(const ModelParams& p, const NumericsConfig& cfg,
                        const FockConvention& conv, PropagatorCache& cache) {
  const FockVector probe = coherent_state(p.alpha(), conv.theta_sign * p.theta(), cfg);
  const FockVector first = apply_squeeze(probe, p.lambda1(), cfg, conv, cache);
  return apply_squeeze(apply_phase(first, p.phi()), p.lambda2(), cfg, conv, cache);
}

FockVector output_state(const ModelParams& p, const NumericsConfig& cfg) {
  PropagatorCache cache;
  return output_state(p, cfg, FockConvention::literal(), cache);
}

namespace {

struct EvolvedStates {
  FockVector psi;
  DerivativeStates derivs;
};

EvolvedStates evolve_with_derivatives(const ModelParams& p, const NumericsConfig& cfg,
                                      const FockConvention& conv, PropagatorCache& cache) {
  const FockVector probe = coherent_state(p.alpha(), conv.theta_sign * p.theta(), cfg);
  const FockVector g_probe = apply_generator(probe, conv);
  require_tail(g_probe, cfg, "derivative_states");

  FockVector state = apply_phase(apply_squeeze(probe, p.lambda1(), cfg, conv, cache), p.phi());
  FockVector lifted =
      apply_phase(apply_squeeze(g_probe, p.lambda1(), cfg, conv, cache), p.phi());
  state = apply_squeeze(state, p.lambda2(), cfg, conv, cache);
  lifted = apply_squeeze(lifted, p.lambda2(), cfg, conv, cache);

  FockVector d2 = apply_generator(state, conv);
  require_tail(d2, cfg, "derivative_states");
  const cplx half_i = -0.5 * kI;
  lifted *= half_i;
  d2 *= half_i;
  return {std::move(state), {std::move(lifted), std::move(d2)}};
}

double max_abs_diff(const Mat2& x, const Mat2& y) { return max_abs_entry(x - y); }

}  // namespace

DerivativeStates derivative_states(const ModelParams& p, const NumericsConfig& cfg,
                                   const FockConvention& conv, PropagatorCache& cache) {
  return evolve_with_derivatives(p, cfg, conv, cache).derivs;
}

DerivativeStates derivative_states(const ModelParams& p, const NumericsConfig& cfg) {
  PropagatorCache cache;
  return derivative_states(p, cfg, FockConvention::literal(), cache);
}

FockInformation information_from_states(const FockVector& psi, const DerivativeStates& d,
                                        const FockConvention& conv) {
  const FockVector* ds[2] = {&d.d_lambda1, &d.d_lambda2};
  cplx proj[2];
  for (int j = 0; j < 2; ++j) proj[j] = inner(*ds[j], psi);  // <dj|psi>
  cplx g[2][2];
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      g[j][k] = inner(*ds[j], *ds[k]) - proj[j] * std::conj(proj[k]);
    }
  }
  const double s = 4.0 * conv.information_scale;
  const double q12 = 0.5 * s * (g[0][1].real() + g[1][0].real());
  const double u12 = 0.5 * s * (g[0][1].imag() - g[1][0].imag());
  FockInformation info;
  info.qfim = Mat2::symmetric(s * g[0][0].real(), q12, s * g[1][1].real());
  info.uhlmann = Mat2::antisymmetric(u12);
  info.dim = psi.dim();
  return info;
}

FockInformation fock_information_at_dim(const ModelParams& p, const NumericsConfig& cfg,
                                        const FockConvention& conv, PropagatorCache& cache) {
  const EvolvedStates ev = evolve_with_derivatives(p, cfg, conv, cache);
  return information_from_states(ev.psi, ev.derivs, conv);
}

FockInformation fock_information(const ModelParams& p, const NumericsConfig& cfg,
                                 const FockConvention& conv, PropagatorCache& cache) {
  cfg.validate();
  FockInformation current = with_adaptive_dim(cfg, [&](const NumericsConfig& c) {
    return fock_information_at_dim(p, c, conv, cache);
  });
  if (!cfg.adapt_dim) return current;

  NumericsConfig next = cfg;
  while (true) {
    next.fock_dim = current.dim * 2;
    if (next.fock_dim > cfg.max_fock_dim) {
      throw ConvergenceError("fock_information: cannot confirm convergence below max_fock_dim " +
                             std::to_string(cfg.max_fock_dim));
    }
    FockInformation doubled = with_adaptive_dim(next, [&](const NumericsConfig& c) {
      return fock_information_at_dim(p, c, conv, cache);
    });
    const double scale = std::max({1.0, max_abs_entry(doubled.qfim), max_abs_entry(doubled.uhlmann)});
    const double change =
        std::max(max_abs_diff(current.qfim, doubled.qfim), max_abs_diff(current.uhlmann, doubled.uhlmann));
    if (change <= kDoublingTol * scale) return current;
    current = doubled;
  }
}

Mat2 qfim_fock(const ModelParams& p, const NumericsConfig& cfg, const FockConvention& conv) {
  PropagatorCache cache;
  return fock_information(p, cfg, conv, cache).qfim;
}

Mat2 uhlmann_fock(const ModelParams& p, const NumericsConfig& cfg, const FockConvention& conv) {
  PropagatorCache cache;
  return fock_information(p, cfg, conv, cache).uhlmann;
}

FockVector output_state_adaptive(const ModelParams& p, const NumericsConfig& cfg,
                                 const FockConvention& conv, PropagatorCache& cache) {
  cfg.validate();
  FockVector current = with_adaptive_dim(cfg, [&](const NumericsConfig& c) {
    return output_state(p, c, conv, cache);
  });
  if (!cfg.adapt_dim) return current;

  NumericsConfig next = cfg;
  while (true) {
    if (current.dim() * 2 > cfg.max_fock_dim) {
      throw ConvergenceError("output_state_adaptive: no stable truncation up to dim " +
                             std::to_string(cfg.max_fock_dim));
    }
    next.fock_dim = current.dim() * 2;
    FockVector refined = with_adaptive_dim(next, [&](const NumericsConfig& c) {
      return output_state(p, c, conv, cache);
    });
    const double change = (current.resized(refined.dim()) - refined).norm();
    if (change < 1e-7) return refined;
    current = std::move(refined);
  }
}

GaussianState moments_fock(const FockVector& state) {
  const std::size_t dim = state.dim();
  const std::span<const cplx> c = state.amps();
  std::vector<double> sqrt_next(dim);
  for (std::size_t n = 0; n < dim; ++n) sqrt_next[n] = std::sqrt(static_cast<double>(n + 1));

  const double norm = state.norm_sq();
  const cplx a1 = kernels::cdot_weighted(c.first(dim - 1), sqrt_next, c.subspan(1)) / norm;
  const double q = std::numbers::sqrt2 * a1.real();
  const double pm = std::numbers::sqrt2 * a1.imag();

  // Centred quadratures applied to the state, one level above the truncation so that
  // a^dag loses nothing. Variances are then sums of squares, free of cancellation.
  std::vector<cplx> dq(dim + 1);
  std::vector<cplx> dp(dim + 1);
  const cplx minus_i(0.0, -1.0);
  for (std::size_t n = 0; n <= dim; ++n) {
    const cplx lower = n + 1 < dim ? sqrt_next[n] * c[n + 1] : cplx{};
    const cplx raise = n > 0 ? std::sqrt(static_cast<double>(n)) * c[n - 1] : cplx{};
    const cplx cn = n < dim ? c[n] : cplx{};
    dq[n] = (lower + raise) / std::numbers::sqrt2 - q * cn;
    dp[n] = minus_i * (lower - raise) / std::numbers::sqrt2 - pm * cn;
  }

  GaussianState g;
  g.mean = {q, pm};
  g.cov = Mat2::symmetric(kernels::norm_sq(dq) / norm, kernels::cdot(dq, dp).real() / norm,
                          kernels::norm_sq(dp) / norm);
  return g;
}

}  // namespace sqscram
