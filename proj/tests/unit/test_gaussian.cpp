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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sqscram/gaussian.hpp"

using namespace sqscram;

namespace {

constexpr double kPi = std::numbers::pi;

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> l(-1.5, 1.5), a(0.0, 3.0), ang(-kPi, kPi);
  return {l(rng), l(rng), a(rng), ang(rng), ang(rng)};
}

}  // namespace

TEST_CASE("covariance is a pure Gaussian state: det sigma = 1/4") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p = random_params(rng);
    const GaussianState g = evolve_moments(p);
    CHECK(g.cov.det() == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(g.cov.b == g.cov.c);
  }
}

TEST_CASE("closed-form moments equal the symplectic product acting on the probe") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params(rng);
    const Mat2 m = symplectic_factors(p).composite();
    CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-12));
    const Vec2 x = m * coherent_input_mean(p.alpha(), p.theta());
    const Mat2 s = 0.5 * (m * m.transpose());
    const GaussianState g = evolve_moments(p);
    const double scale = 1.0 + std::abs(x.x) + std::abs(x.y);
    CHECK(std::abs(g.mean.x - x.x) <= 1e-12 * scale);
    CHECK(std::abs(g.mean.y - x.y) <= 1e-12 * scale);
    const double cs = 1.0 + s.frobenius_sq();
    CHECK(std::abs(g.cov.a - s.a) <= 1e-12 * cs);
    CHECK(std::abs(g.cov.b - s.b) <= 1e-12 * cs);
    CHECK(std::abs(g.cov.d - s.d) <= 1e-12 * cs);
  }
}

TEST_CASE("vacuum probe without squeezing stays the vacuum") {
  const GaussianState g = evolve_moments(ModelParams(0.0, 0.0, 0.0, 0.3, 1.1));
  CHECK(g.mean.x == 0.0);
  CHECK(g.mean.y == 0.0);
  CHECK(g.cov.a == doctest::Approx(0.5));
  CHECK(g.cov.b == doctest::Approx(0.0));
  CHECK(g.cov.d == doctest::Approx(0.5));
}

TEST_CASE("phi = 0: no correlation and dependence on lambda1 + lambda2 only") {
  for (double l1 : {0.0, 0.3, 1.2}) {
    for (double l2 : {-0.4, 0.0, 0.5}) {
      for (double a : {0.0, 1.0, 2.5}) {
        for (double th : {0.0, 0.4, 2.0}) {
          const GaussianState g = evolve_moments(ModelParams(l1, l2, a, th, 0.0));
          const GaussianState s = evolve_moments(ModelParams(l1 + l2, 0.0, a, th, 0.0));
          const GaussianState t = evolve_moments(ModelParams(0.0, l1 + l2, a, th, 0.0));
          CHECK(g.cov.b == doctest::Approx(0.0));
          for (const GaussianState* o : {&s, &t}) {
            CHECK(g.mean.x == doctest::Approx(o->mean.x).epsilon(1e-12));
            CHECK(g.mean.y == doctest::Approx(o->mean.y).epsilon(1e-12));
            CHECK(g.cov.a == doctest::Approx(o->cov.a).epsilon(1e-12));
            CHECK(g.cov.d == doctest::Approx(o->cov.d).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("phi = pi/2: no correlation and covariance depends on lambda2 - lambda1 only") {
  for (double l1 : {0.0, 0.3, 1.2}) {
    for (double shift : {0.0, 0.25, 0.9}) {
      const GaussianState g = evolve_moments(ModelParams(l1, 0.2, 1.0, 0.7, kPi / 2));
      const GaussianState h = evolve_moments(ModelParams(l1 + shift, 0.2 + shift, 1.0, 0.7, kPi / 2));
      CHECK(g.cov.b == doctest::Approx(0.0));
      CHECK(g.cov.a == doctest::Approx(h.cov.a).epsilon(1e-12));
      CHECK(g.cov.d == doctest::Approx(h.cov.d).epsilon(1e-12));
      CHECK(g.cov.a == doctest::Approx(0.5 * std::exp(2.0 * (0.2 - l1))).epsilon(1e-12));
    }
  }
}

TEST_CASE("analytic moment derivatives match central differences") {
  std::mt19937_64 rng(3);
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = random_params(rng);
    const MomentDerivatives d = moment_derivatives(p);
    const ModelParams ps[2][2] = {{p.with_lambda1(p.lambda1() + h), p.with_lambda1(p.lambda1() - h)},
                                  {p.with_lambda2(p.lambda2() + h), p.with_lambda2(p.lambda2() - h)}};
    for (int j = 0; j < 2; ++j) {
      const GaussianState up = evolve_moments(ps[j][0]);
      const GaussianState dn = evolve_moments(ps[j][1]);
      const Vec2 dm = (1.0 / (2 * h)) * (up.mean - dn.mean);
      const Mat2 dc = (1.0 / (2 * h)) * (up.cov - dn.cov);
      const double sm = 1.0 + std::abs(dm.x) + std::abs(dm.y);
      const double sc = 1.0 + max_abs_entry(dc);
      CHECK(std::abs(d.mean[j].x - dm.x) <= 1e-6 * sm);
      CHECK(std::abs(d.mean[j].y - dm.y) <= 1e-6 * sm);
      CHECK(max_abs_entry(d.cov[j] - dc) <= 1e-6 * sc);
    }
  }
}

TEST_CASE("periodicity: covariance is pi-periodic in phi and independent of theta") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = random_params(rng);
    const GaussianState g = evolve_moments(p);
    const GaussianState r = evolve_moments(p.with_phi(p.phi() + kPi));
    const GaussianState t = evolve_moments(p.with_theta(p.theta() + kPi));
    const double s = 1.0 + max_abs_entry(g.cov);
    CHECK(max_abs_entry(g.cov - r.cov) <= 1e-12 * s);
    CHECK(max_abs_entry(g.cov - t.cov) <= 1e-12 * s);
    CHECK(t.mean.x == doctest::Approx(-g.mean.x).epsilon(1e-10).scale(1.0));
    CHECK(t.mean.y == doctest::Approx(-g.mean.y).epsilon(1e-10).scale(1.0));
  }
}
