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

#include "sqscram_cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <system_error>

namespace sqscram::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  const auto first = std::find_if(s.begin(), s.end(), not_space);
  const auto last = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return first < last ? std::string_view(first, last) : std::string_view{};
}

double parse_decimal(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  const std::size_t pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return parse_decimal(s, text);

  std::string_view coef = s.substr(0, pi_at);
  std::string_view rest = s.substr(pi_at + 2);
  double sign = 1.0;
  if (!coef.empty() && (coef.front() == '-' || coef.front() == '+')) {
    sign = coef.front() == '-' ? -1.0 : 1.0;
    coef.remove_prefix(1);
  }
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  const double k = coef.empty() ? 1.0 : parse_decimal(coef, text);
  double m = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("bad pi literal: '" + std::string(text) + "'");
    m = parse_decimal(rest.substr(1), text);
    if (m == 0.0) throw std::invalid_argument("division by zero in '" + std::string(text) + "'");
  }
  return sign * k * std::numbers::pi / m;
}

WeightMatrix parse_weight(std::string_view text) {
  std::array<double, 4> w{};
  std::size_t n = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (n == 4) throw std::invalid_argument("--weight takes exactly four entries");
    w[n++] = parse_real(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (n != 4) throw std::invalid_argument("--weight takes exactly four entries");
  return WeightMatrix(Mat2{w[0], w[1], w[2], w[3]});
}

double ScanSpec::value(int i) const {
  if (i == count - 1) return stop;
  return start + i * (stop - start) / (count - 1);
}

ScanSpec make_scan_spec(std::string_view axis, double start, double stop, int count) {
  ScanSpec spec;
  if (axis == "lambda1") {
    spec.axis = ScanAxis::kLambda1;
  } else if (axis == "lambda2") {
    spec.axis = ScanAxis::kLambda2;
  } else if (axis == "alpha") {
    spec.axis = ScanAxis::kAlpha;
  } else if (axis == "theta") {
    spec.axis = ScanAxis::kTheta;
  } else if (axis == "phi") {
    spec.axis = ScanAxis::kPhi;
  } else if (axis == "z") {
    spec.axis = ScanAxis::kZ;
  } else {
    throw std::invalid_argument("unknown scan axis '" + std::string(axis) + "'");
  }
  if (count < 2) throw std::invalid_argument("scan count must be >= 2");
  if (!(start < stop)) throw std::invalid_argument("scan range needs start < stop");
  spec.start = start;
  spec.stop = stop;
  spec.count = count;
  return spec;
}

ModelParams with_axis(const ModelParams& p, ScanAxis axis, double v) {
  switch (axis) {
    case ScanAxis::kLambda1: return p.with_lambda1(v);
    case ScanAxis::kLambda2: return p.with_lambda2(v);
    case ScanAxis::kAlpha: return p.with_alpha(v);
    case ScanAxis::kTheta: return p.with_theta(v);
    case ScanAxis::kPhi: return p.with_phi(v);
    case ScanAxis::kZ: return p;
  }
  return p;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  static const std::array<std::string_view, 4> kCommands{"bounds", "scan", "validate",
                                                         "generaldyne"};
  std::vector<std::string> out;
  std::vector<std::string> injected;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
      continue;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      const std::size_t eq = t.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected key=value");
      }
      const std::string_view key = trim(t.substr(0, eq));
      const std::string_view value = trim(t.substr(eq + 1));
      if (key.empty()) {
        throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": empty key");
      }
      injected.push_back("--" + std::string(key) + "=" + std::string(value));
    }
  }
  auto cmd = std::find_if(out.begin(), out.end(), [](const std::string& a) {
    return std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
  });
  const auto at = cmd == out.end() ? out.end() : cmd + 1;
  out.insert(at, injected.begin(), injected.end());
  return out;
}

}  // namespace sqscram::cli
