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
#include <sstream>

#include "sqscram/report.hpp"

using namespace sqscram;

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t count_commas(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), ','));
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(24.0) == "24");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_number(1.0 / 3.0, 4) == "0.3333");
  CHECK(format_number(-2.5e-20) == "-2.5e-20");
}

TEST_CASE("header and rows have one cell per column") {
  const std::string h = csv_header();
  CHECK(count_commas(h) + 1 == report_columns().size());
  const BoundReport r = make_report(ModelParams(0.5, 0.1, 1.0, 0.3, 0.9));
  CHECK(count_commas(csv_row(r)) + 1 == report_columns().size());
  CHECK(h.rfind("lambda1,lambda2,alpha,theta,phi,z,Q11,Q12,Q22,U12,S,C,R,T_I,C_Q,", 0) == 0);
}

TEST_CASE("singular points are reported in-band with empty cells") {
  const BoundReport r = make_report(ModelParams(0.5, 0.0, 1.0, 0.0, 0.0));
  CHECK(r.singular);
  CHECK_FALSE(r.S.has_value());
  CHECK_FALSE(r.R.has_value());
  CHECK_FALSE(r.C_Q.has_value());
  CHECK_FALSE(r.C_sep_min_1.has_value());
  CHECK(r.Q11 == 24.0);
  const std::string row = csv_row(r);
  CHECK(row.back() == '1');
  CHECK(row.find(",,") != std::string::npos);
}

TEST_CASE("CSV and JSON round trip losslessly") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> l(-1.5, 1.5), a(0.0, 3.0), ang(-kPi, kPi), lz(-3, 3);
  for (int i = 0; i < 400; ++i) {
    const ModelParams p(l(rng), l(rng), a(rng), ang(rng), i % 7 == 0 ? 0.0 : ang(rng));
    ReportOptions opts;
    if (i % 2) opts.z = std::exp(lz(rng));
    if (i % 3 == 0) opts.weight = WeightMatrix(Mat2::symmetric(2.0, 0.25, 1.0));
    const BoundReport r = make_report(p, opts);
    CHECK(parse_csv_row(csv_row(r)) == r);
    CHECK(report_from_json(to_json(r)) == r);
  }
}

TEST_CASE("digits override rounds every value") {
  const BoundReport r = make_report(ModelParams(0.5, 0.1, 1.0, 0.3, 0.9));
  const BoundReport back = parse_csv_row(csv_row(r, 5));
  CHECK(back.Q12 == doctest::Approx(r.Q12).epsilon(1e-4));
  CHECK(back.Q12 != r.Q12);
  CHECK(to_json(r, 3).find("\"Q11\":24.0") != std::string::npos);
}

TEST_CASE("malformed rows are rejected") {
  CHECK_THROWS_AS(parse_csv_row("1,2,3"), std::invalid_argument);
  std::string row = csv_row(make_report(ModelParams(0.5, 0.1, 1.0, 0.3, 0.9)));
  row.replace(0, 1, "x");
  CHECK_THROWS_AS(parse_csv_row(row), std::invalid_argument);
  std::string flag = csv_row(make_report(ModelParams(0.5, 0.1, 1.0, 0.3, 0.9)));
  flag.back() = '2';
  CHECK_THROWS_AS(parse_csv_row(flag), std::invalid_argument);
}

TEST_CASE("JSON array form") {
  const std::vector<BoundReport> rows{make_report(ModelParams(0, 0, 0, 0, 0)),
                                      make_report(ModelParams(1, 0, 1, 0.5, 0.5))};
  const std::string j = to_json(rows);
  CHECK(j.front() == '[');
  CHECK(j.find("\"singular\":true") != std::string::npos);
  CHECK(j.find("\"singular\":false") != std::string::npos);
}
