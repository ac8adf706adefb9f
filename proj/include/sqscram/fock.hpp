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

// Truncated Fock-space oracle.
//
// Builds the evolved probe state, its two parameter-derivative states and the QFI and
// Uhlmann-curvature matrices from state overlaps alone, so that every closed form
// elsewhere in the library can be checked against an independent brute-force path.

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "sqscram/gaussian.hpp"
#include "sqscram/linalg2.hpp"
#include "sqscram/params.hpp"

namespace sqscram {

using cplx = std::complex<double>;

/// Amplitudes c_0 .. c_{D-1} of a truncated single-mode state.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::size_t dim) : amps_(dim) {}
  explicit FockVector(std::vector<cplx> amps) : amps_(std::move(amps)) {}

  /// |n> in dimension `dim`.
  static FockVector basis(std::size_t dim, std::size_t n);

  std::size_t dim() const noexcept { return amps_.size(); }
  cplx& operator[](std::size_t n) { return amps_[n]; }
  const cplx& operator[](std::size_t n) const { return amps_[n]; }
  std::span<cplx> amps() noexcept { return amps_; }
  std::span<const cplx> amps() const noexcept { return amps_; }

  double norm_sq() const;
  double norm() const;
  /// Probability mass in the top eighth of the basis (at least two levels),
  /// sum_{n >= D - max(ceil(D/8), 2)} |c_n|^2.
  double tail_mass() const;
  /// Zero-padded or truncated copy.
  FockVector resized(std::size_t dim) const;

  FockVector& operator*=(cplx s);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator*(cplx s, FockVector v) { return v *= s; }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

 private:
  std::vector<cplx> amps_;
};

/// First index of the tail band for dimension `dim`.
std::size_t tail_start(std::size_t dim);

/// <x|y>
cplx inner(const FockVector& x, const FockVector& y);

/// Sign and phase conventions under which the oracle builds the model.
///
/// The squeezing generator used for both the unitaries and the derivative states is
///   G_conv = squeeze_sign * P^dag(generator_phase) (a^2 + a^dag^2) P(generator_phase),
/// with P(t) = exp(-i t a^dag a); the probe is |alpha exp(i theta_sign theta)>, the
/// scrambler is exp(-i phi a^dag a). Information matrices are multiplied by
/// `information_scale`.
///
/// Three presets exist because the closed forms in this library come in two
/// incompatible conventions; see README ("Conventions").
struct FockConvention {
  double squeeze_sign = 1.0;
  double generator_phase = 0.0;
  double theta_sign = 1.0;
  double information_scale = 1.0;

  /// The model exactly as written: G = a^2 + a^dag^2, probe |alpha e^{i theta}>.
  static FockConvention literal() { return {}; }
  /// Reproduces qfim_closed / uhlmann_closed entrywise, including the sign of U12.
  static FockConvention appendix() { return {-1.0, 0.0, 1.0, 4.0}; }
  /// Reproduces evolve_moments: G = -i(a^2 - a^dag^2), probe |alpha e^{-i theta}>.
  static FockConvention phase_space();
};

/// exp(-i lambda G / 2) for G = a^2 + a^dag^2 truncated to `dim`.
///
/// G only couples n to n +- 2, so it splits into an even and an odd real symmetric
/// tridiagonal block. Both blocks are diagonalized once at construction; each
/// application is then two dense real-by-complex mat-vecs per block.
class SqueezePropagator {
 public:
  explicit SqueezePropagator(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  FockVector apply(const FockVector& state, double lambda) const;

 private:
  struct Block {
    std::size_t parity = 0;
    std::size_t size = 0;
    std::vector<double> eigenvalues;
    std::vector<double> vecs;    // row-major V, V(i, k) = component i of eigenvector k
    std::vector<double> vecs_t;  // row-major V^T
  };

  std::size_t dim_;
  Block blocks_[2];
};

/// Thread-safe memo of propagators by dimension.
class PropagatorCache {
 public:
  std::shared_ptr<const SqueezePropagator> get(std::size_t dim);

 private:
  std::mutex mu_;
  std::map<std::size_t, std::shared_ptr<const SqueezePropagator>> cache_;
};

/// exp(-i lambda G / 2) |state> by a substepped Taylor series on the banded generator.
/// Independent of SqueezePropagator; slower, used to cross-check it.
FockVector expmv_taylor(const FockVector& state, double lambda);

FockVector coherent_state(double alpha, double theta, const NumericsConfig& cfg);

/// (a^2 + a^dag^2) |state>, truncated; generally unnormalized.
FockVector apply_G(const FockVector& state);
FockVector apply_generator(const FockVector& state, const FockConvention& conv);

FockVector apply_squeeze(const FockVector& state, double lambda, const NumericsConfig& cfg);
FockVector apply_squeeze(const FockVector& state, double lambda, const NumericsConfig& cfg,
                         const FockConvention& conv, PropagatorCache& cache);

/// c_n -> exp(-i phi n) c_n
FockVector apply_phase(const FockVector& state, double phi);

/// U2 V U1 |alpha> at dimension cfg.fock_dim.
FockVector output_state(const ModelParams& p, const NumericsConfig& cfg);
FockVector output_state(const ModelParams& p, const NumericsConfig& cfg,
                        const FockConvention& conv, PropagatorCache& cache);

struct DerivativeStates {
  FockVector d_lambda1;
  FockVector d_lambda2;
};

/// d1 = -(i/2) U2 V U1 G |alpha>, d2 = -(i/2) G U2 V U1 |alpha>, both unnormalized.
DerivativeStates derivative_states(const ModelParams& p, const NumericsConfig& cfg);
DerivativeStates derivative_states(const ModelParams& p, const NumericsConfig& cfg,
                                   const FockConvention& conv, PropagatorCache& cache);

struct FockInformation {
  Mat2 qfim;
  Mat2 uhlmann;
  std::size_t dim = 0;
};

/// Q_jk = 4 Re[<dj|dk> - <dj|psi><psi|dk>], U_jk = 4 Im[...], times the convention scale.
FockInformation information_from_states(const FockVector& psi, const DerivativeStates& d,
                                        const FockConvention& conv);

/// Information matrices at exactly cfg.fock_dim; throws TailError on truncation overflow.
FockInformation fock_information_at_dim(const ModelParams& p, const NumericsConfig& cfg,
                                        const FockConvention& conv, PropagatorCache& cache);

/// Information matrices with adaptive truncation.
///
/// Starting from cfg.fock_dim the dimension doubles on TailError, up to cfg.max_fock_dim.
/// A result is accepted only when the next doubling leaves every entry unchanged to
/// 1e-8 (relative to max(1, max|entry|)). With cfg.adapt_dim == false a single
/// evaluation at cfg.fock_dim is returned.
FockInformation fock_information(const ModelParams& p, const NumericsConfig& cfg,
                                 const FockConvention& conv, PropagatorCache& cache);

Mat2 qfim_fock(const ModelParams& p, const NumericsConfig& cfg,
               const FockConvention& conv = FockConvention::appendix());
Mat2 uhlmann_fock(const ModelParams& p, const NumericsConfig& cfg,
                  const FockConvention& conv = FockConvention::appendix());

/// Output state with adaptive truncation: the dimension doubles from cfg.fock_dim until the
/// tail checks pass and the next doubling moves the state by less than 1e-7 in norm; the
/// larger of the two states is returned.
FockVector output_state_adaptive(const ModelParams& p, const NumericsConfig& cfg,
                                 const FockConvention& conv, PropagatorCache& cache);

/// Quadrature means and covariance from <a>, <a^2>, <a^dag a>.
GaussianState moments_fock(const FockVector& state);

}  // namespace sqscram
