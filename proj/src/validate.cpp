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

#include "sqscram/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqscram/bounds.hpp"
#include "sqscram/fock.hpp"
#include "sqscram/gaussian.hpp"

namespace sqscram {

std::vector<ModelParams> ValidationGrid::points() const {
  std::vector<ModelParams> out;
  out.reserve(size());
  for (double l1 : lambda1)
    for (double l2 : lambda2)
      for (double a : alpha)
        for (double th : theta)
          for (double ph : phi) out.emplace_back(l1, l2, a, th, ph);
  return out;
}

ValidationGrid standard_grid() {
  constexpr double pi = std::numbers::pi;
  const std::vector<double> angles{0.0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
  return {{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5}, {0.0, 0.5}, {0.0, 0.5, 1.0, 2.0}, angles,
          angles};
}

namespace {

std::vector<double> thin_axis(const std::vector<double>& v, int k) {
  const auto n = static_cast<int>(v.size());
  if (k <= 0 || k >= n) return v;
  if (k == 1) return {v[n / 2]};
  std::vector<double> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(v[static_cast<std::size_t>(std::lround(double(i) * (n - 1) / (k - 1)))]);
  }
  return out;
}

}  // namespace

ValidationGrid thin_grid(const ValidationGrid& g, int k) {
  return {thin_axis(g.lambda1, k), thin_axis(g.lambda2, k), thin_axis(g.alpha, k),
          thin_axis(g.theta, k), thin_axis(g.phi, k)};
}

double normalized_error(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-2);
}

ValidationResult validate_grid(const ValidationGrid& g, const NumericsConfig& cfg) {
  cfg.validate();
  PropagatorCache appendix_cache;
  PropagatorCache moments_cache;
  const FockConvention appendix = FockConvention::appendix();
  const FockConvention phase_space = FockConvention::phase_space();

  ValidationResult res;
  for (const ModelParams& p : g.points()) {
    const FockInformation fi = fock_information(p, cfg, appendix, appendix_cache);
    const InfoMatrices closed = info_closed(p);
    for (double e : {normalized_error(fi.qfim.a, closed.Q.a),
                     normalized_error(fi.qfim.b, closed.Q.b),
                     normalized_error(fi.qfim.d, closed.Q.d)}) {
      res.max_q_error = std::max(res.max_q_error, e);
    }
    res.max_u_error = std::max(res.max_u_error, normalized_error(fi.uhlmann.b, closed.U.b));

    const GaussianState fm =
        moments_fock(output_state_adaptive(p, cfg, phase_space, moments_cache));
    const GaussianState cm = evolve_moments(p);
    for (double e : {normalized_error(fm.mean.x, cm.mean.x), normalized_error(fm.mean.y, cm.mean.y),
                     normalized_error(fm.cov.a, cm.cov.a), normalized_error(fm.cov.b, cm.cov.b),
                     normalized_error(fm.cov.d, cm.cov.d)}) {
      res.max_moment_error = std::max(res.max_moment_error, e);
    }
    res.max_dim = std::max(res.max_dim, fi.dim);
    ++res.points;
  }
  return res;
}

}  // namespace sqscram
