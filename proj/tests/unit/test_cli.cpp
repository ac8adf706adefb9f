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
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "sqscram_cli.hpp"

using namespace sqscram;
using namespace sqscram::cli;

TEST_CASE("angle literals") {
  constexpr double pi = std::numbers::pi;
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real("-1e-3") == -1e-3);
  CHECK(parse_real("pi") == pi);
  CHECK(parse_real("pi/4") == pi / 4);
  CHECK(parse_real("3pi/8") == 3 * pi / 8);
  CHECK(parse_real("3*pi/8") == 3 * pi / 8);
  CHECK(parse_real("-pi/2") == -pi / 2);
  CHECK(parse_real(" 2pi ") == 2 * pi);
  for (const char* bad : {"", "abc", "pi/", "pi/0", "pi4", "1.5x", "nan", "inf", "2/pi"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_real(bad), std::invalid_argument);
  }
}

TEST_CASE("weight flag") {
  CHECK(parse_weight("2,0.5,0.5,1").matrix() == Mat2::symmetric(2.0, 0.5, 1.0));
  CHECK_THROWS_AS(parse_weight("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1,0,0,1,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1,2,3,4"), std::invalid_argument);
}

TEST_CASE("scan spec") {
  const ScanSpec s = make_scan_spec("lambda1", 0.0, 1.5, 7);
  CHECK(s.value(0) == 0.0);
  CHECK(s.value(1) == 0.25);
  CHECK(s.value(6) == 1.5);
  const ScanSpec t = make_scan_spec("phi", 0.1, 0.7, 3);
  CHECK(t.value(2) == 0.7);
  CHECK_THROWS_AS(make_scan_spec("lambda1", 0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_scan_spec("lambda1", 1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_scan_spec("mu", 0.0, 1.0, 3), std::invalid_argument);
  const ModelParams p(0.1, 0.2, 0.3, 0.4, 0.5);
  CHECK(with_axis(p, ScanAxis::kAlpha, 2.0).alpha() == 2.0);
  CHECK(with_axis(p, ScanAxis::kZ, 2.0) == p);
}

TEST_CASE("config files expand to flags after the subcommand") {
  const char* path = "test_cli_config.txt";
  {
    std::ofstream f(path);
    f << "# point\nalpha = 1\n\nphi=pi/4\n";
  }
  const auto args = expand_config({"--config", path, "bounds", "--alpha", "2"});
  REQUIRE(args.size() == 5);
  CHECK(args[0] == "bounds");
  CHECK(args[1] == "--alpha=1");
  CHECK(args[2] == "--phi=pi/4");
  CHECK(args[3] == "--alpha");
  CHECK(args[4] == "2");
  CHECK_THROWS_AS(expand_config({"bounds", "--config"}), std::invalid_argument);
  CHECK_THROWS_AS(expand_config({"bounds", "--config=/nonexistent/file"}), std::invalid_argument);
  {
    std::ofstream f(path);
    f << "alpha 1\n";
  }
  CHECK_THROWS_AS(expand_config({"bounds", "--config", path}), std::invalid_argument);
  std::remove(path);
}
