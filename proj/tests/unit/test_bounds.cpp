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

#include "sqscram/bounds.hpp"
#include "sqscram/errors.hpp"
#include "sqscram/validate.hpp"

using namespace sqscram;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSing = 1e-12;

ScalarBounds bounds_at(const ModelParams& p) {
  const InfoMatrices m = info_closed(p);
  return scalar_bounds(m.Q, m.U, kSing);
}

}  // namespace

TEST_CASE("worked example: vacuum probe, no first squeezing, optimal phases") {
  const ModelParams p(0.0, 0.0, 0.0, kPi / 4, kPi / 4);
  const InfoMatrices m = info_closed(p);
  const ScalarBounds b = scalar_bounds(m.Q, m.U, kSing);
  REQUIRE_FALSE(b.singular());
  CHECK(*b.C_Q == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(*b.R == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.T_I == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(*b.bracket_T == doctest::Approx(0.25 * (1 + 1 / std::numbers::sqrt2)));
  CHECK(*b.bracket_R == doctest::Approx(0.5));
  const StepwiseBounds s = stepwise_optimal(m.Q, *b.S);
  CHECK(s.c_sep_min_1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.c_sep_min_2 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.gamma_star_1 == doctest::Approx(0.5));
}

TEST_CASE("Q11 = 16 alpha^2 + 8") {
  for (auto [a, v] : {std::pair{0.0, 8.0}, std::pair{1.0, 24.0}, std::pair{2.0, 72.0}}) {
    CHECK(qfim_closed(ModelParams(0.7, 0.1, a, 0.2, 0.4)).a == v);
  }
}

TEST_CASE("sin 2 phi = 0 makes Q singular and the report stays in-band") {
  for (double phi : {0.0, kPi / 2, kPi}) {
    for (double a : {0.0, 1.0}) {
      for (double l1 : {0.0, 0.75, 1.5}) {
        const ModelParams p(l1, 0.0, a, 0.3, phi);
        const InfoMatrices m = info_closed(p);
        CHECK(is_singular(m.Q, 1e-10));
        const ScalarBounds b = scalar_bounds(m.Q, m.U, kSing);
        CHECK(b.singular());
        CHECK_FALSE(b.R.has_value());
        CHECK_FALSE(b.C_Q.has_value());
        CHECK(b.T_I == doctest::Approx(0.0).scale(1.0));
        CHECK_THROWS_AS(weighted_cq(m.Q, WeightMatrix(), kSing), SingularError);
      }
    }
  }
}

TEST_CASE("stepwise bound domain errors") {
  const Mat2 q = qfim_closed(ModelParams(0.5, 0.0, 1.0, kPi / 4, kPi / 4));
  CHECK_THROWS_AS(stepwise_bounds(q, 0.01, 0.0), DomainError);
  CHECK_THROWS_AS(stepwise_bounds(q, 0.01, 1.0), DomainError);
  CHECK_THROWS_AS(stepwise_bounds(q, 0.01, -0.5), DomainError);
  CHECK_THROWS_AS(stepwise_bounds(q, std::numeric_limits<double>::infinity(), 0.5), SingularError);
  CHECK_THROWS_AS(stepwise_optimal(q, 0.0), SingularError);
  CHECK_NOTHROW(stepwise_bounds(q, 0.01, 0.5));
}

TEST_CASE("stepwise optimum: analytic gamma* and minimum against a dense grid") {
  for (const ModelParams& p : standard_grid().points()) {
    const InfoMatrices m = info_closed(p);
    const ScalarBounds b = scalar_bounds(m.Q, m.U, kSing);
    if (b.singular()) continue;
    const StepwiseBounds s = stepwise_optimal(m.Q, *b.S);
    const StepwisePair at_star = stepwise_bounds(m.Q, *b.S, s.gamma_star_1);
    CHECK(at_star.sep1 == doctest::Approx(s.c_sep_min_1).epsilon(1e-12));
    CHECK(stepwise_bounds(m.Q, *b.S, s.gamma_star_2).sep2 ==
          doctest::Approx(s.c_sep_min_2).epsilon(1e-12));
    for (int i = 1; i < 200; ++i) {
      const double g = i / 200.0;
      CHECK(s.c_sep_min_1 <= s.c_sep1(g) * (1 + 1e-12));
      CHECK(s.c_sep_min_2 <= s.c_sep2(g) * (1 + 1e-12));
    }
  }
}

TEST_CASE("property: Q positive semidefinite, U antisymmetric, 0 <= T_I <= R <= 1") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> l(-2.0, 2.0), a(0.0, 4.0), ang(-kPi, kPi);
  for (int i = 0; i < 5000; ++i) {
    const ModelParams p(l(rng), l(rng), a(rng), ang(rng), ang(rng));
    const InfoMatrices m = info_closed(p);
    const double s = max_abs_entry(m.Q);
    CHECK(symmetric_eigenvalues(m.Q)[0] >= -1e-12 * s);
    CHECK(m.U.a == 0.0);
    CHECK(m.U.b == -m.U.c);
    const ScalarBounds b = scalar_bounds(m.Q, m.U, kSing);
    CHECK(b.T_I >= 0.0);
    if (b.singular()) continue;
    CHECK(*b.R >= 0.0);
    CHECK(*b.R <= 1.0 + 1e-12);
    CHECK(b.T_I <= *b.R * (1 + 1e-12));
    CHECK(*b.C_Q <= *b.bracket_T);
    CHECK(*b.bracket_T <= *b.bracket_R * (1 + 1e-12));
  }
}

TEST_CASE("property: closed forms are independent of lambda2 and periodic") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> l(-1.5, 1.5), a(0.0, 3.0), ang(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p(l(rng), l(rng), a(rng), ang(rng), ang(rng));
    const InfoMatrices m = info_closed(p);
    const double s = max_abs_entry(m.Q);
    for (const ModelParams& q : {p.with_lambda2(l(rng)), p.with_theta(p.theta() + kPi),
                                 p.with_phi(p.phi() + kPi), p.with_phi(p.phi() - 2 * kPi)}) {
      const InfoMatrices n = info_closed(q);
      CHECK(max_abs_entry(n.Q - m.Q) <= 1e-12 * s);
      CHECK(std::abs(n.U.b - m.U.b) <= 1e-12 * s);
    }
  }
}

TEST_CASE("optimized display equals Tr Q / det Q at theta = phi = pi/4") {
  for (double a : {0.0, 0.5, 1.0, 2.0, 10.0}) {
    for (double l1 = 0.0; l1 <= 2.0; l1 += 0.125) {
      const ScalarBounds b = bounds_at(ModelParams(l1, 0.0, a, kPi / 4, kPi / 4));
      CHECK(cq_optimal_closed(a, l1) == doctest::Approx(*b.C_Q).epsilon(1e-12));
    }
  }
  CHECK(cq_optimal_closed(0.0, 0.0) == doctest::Approx(0.25));
}

TEST_CASE("vacuum probe: R = 1 independent of lambda1") {
  for (double l1 = 0.0; l1 <= 3.0; l1 += 0.1) {
    CHECK(*bounds_at(ModelParams(l1, 0.3, 0.0, kPi / 4, kPi / 4)).R ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("large-alpha expansions") {
  const double a = 30.0;
  for (double l1 : {0.0, 0.25, 0.5, 1.0, 1.5}) {
    const ScalarBounds b = bounds_at(ModelParams(l1, 0.0, a, kPi / 4, kPi / 4));
    CHECK(std::abs(*b.R - asymptotic_R(a, l1)) < 10.0 / (a * a * a));
    CHECK(std::abs(b.T_I - asymptotic_T(l1)) < 0.01 * b.T_I);
    CHECK(std::abs(*b.C_Q - (1 + std::exp(-4 * l1)) / (16 * a * a)) < 0.01 * *b.C_Q);
  }
  CHECK_THROWS_AS(asymptotic_R(0.0, 1.0), DomainError);
}

TEST_CASE("weighted SLD bound") {
  const Mat2 q = qfim_closed(ModelParams(0.5, 0.0, 1.0, 0.3, 0.6));
  const Mat2 u = uhlmann_closed(ModelParams(0.5, 0.0, 1.0, 0.3, 0.6));
  const ScalarBounds b = scalar_bounds(q, u, kSing);
  CHECK(weighted_cq(q, WeightMatrix(), kSing) == doctest::Approx(*b.C_Q));
  CHECK(weighted_cq(q, WeightMatrix(Mat2::diag(3.0, 3.0)), kSing) == doctest::Approx(3 * *b.C_Q));
  const Mat2 w = Mat2::symmetric(2.0, 0.3, 0.5);
  const Mat2 qi = q.inverse();
  CHECK(weighted_cq(q, WeightMatrix(w), kSing) ==
        doctest::Approx(w.a * qi.a + w.b * qi.c + w.c * qi.b + w.d * qi.d));
}

TEST_CASE("C is empty when det U vanishes") {
  const InfoMatrices m = info_closed(ModelParams(0.5, 0.0, 1.0, 0.3, 0.0));
  CHECK(m.U.b == doctest::Approx(0.0).scale(1.0));
  CHECK_FALSE(scalar_bounds(m.Q, m.U, kSing).C.has_value());
}
