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
#include <limits>
#include <stdexcept>

#include "sqscram/params.hpp"

using namespace sqscram;

TEST_CASE("model params validate their inputs") {
  CHECK_NOTHROW(ModelParams(0.5, -0.2, 0.0, 7.0, -3.0));
  CHECK_THROWS_AS(ModelParams(0.0, 0.0, -1e-12, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(std::nan(""), 0.0, 1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(0.0, 0.0, 1.0, std::numeric_limits<double>::infinity(), 0.0),
                  std::invalid_argument);
}

TEST_CASE("with_* copies change one field") {
  const ModelParams p(0.1, 0.2, 0.3, 0.4, 0.5);
  CHECK(p.with_lambda1(1.0) == ModelParams(1.0, 0.2, 0.3, 0.4, 0.5));
  CHECK(p.with_lambda2(1.0) == ModelParams(0.1, 1.0, 0.3, 0.4, 0.5));
  CHECK(p.with_alpha(1.0) == ModelParams(0.1, 0.2, 1.0, 0.4, 0.5));
  CHECK(p.with_theta(1.0) == ModelParams(0.1, 0.2, 0.3, 1.0, 0.5));
  CHECK(p.with_phi(1.0) == ModelParams(0.1, 0.2, 0.3, 0.4, 1.0));
  CHECK_THROWS_AS(p.with_alpha(-1.0), std::invalid_argument);
}

TEST_CASE("numerics config") {
  NumericsConfig cfg = default_numerics();
  CHECK(cfg.fock_dim == 256);
  CHECK(cfg.tail_tol == 1e-10);
  CHECK(cfg.sing_tol == 1e-12);
  CHECK_NOTHROW(cfg.validate());

  cfg.fock_dim = 3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = default_numerics();
  cfg.tail_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = default_numerics();
  cfg.sing_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("weight matrix must be symmetric positive definite") {
  CHECK(WeightMatrix().matrix() == Mat2::identity());
  CHECK_NOTHROW(WeightMatrix(Mat2::symmetric(2.0, 0.5, 1.0)));
  CHECK_THROWS_AS(WeightMatrix(Mat2{1.0, 0.5, 0.4, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightMatrix(Mat2::symmetric(1.0, 2.0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(WeightMatrix(Mat2::diag(1.0, 0.0)), std::invalid_argument);
}
