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

#include "sqscram/report.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>
#include <variant>

#include "sqscram/bounds.hpp"
#include "sqscram/errors.hpp"
#include "sqscram/generaldyne.hpp"

namespace sqscram {

BoundReport make_report(const ModelParams& p, const ReportOptions& opts) {
  BoundReport r;
  r.lambda1 = p.lambda1();
  r.lambda2 = p.lambda2();
  r.alpha = p.alpha();
  r.theta = p.theta();
  r.phi = p.phi();
  r.z = opts.z;

  const InfoMatrices info = info_closed(p);
  r.Q11 = info.Q.a;
  r.Q12 = info.Q.b;
  r.Q22 = info.Q.d;
  r.U12 = info.U.b;

  const ScalarBounds b = scalar_bounds(info.Q, info.U, opts.sing_tol);
  r.S = b.S;
  r.C = b.C;
  r.R = b.R;
  r.T_I = b.T_I;
  r.C_Q = b.C_Q;
  r.bracket_T = b.bracket_T;
  r.bracket_R = b.bracket_R;
  r.singular = b.singular();

  if (!r.singular) {
    const StepwiseBounds sw = stepwise_optimal(info.Q, *b.S);
    r.C_sep_min_1 = sw.c_sep_min_1;
    r.C_sep_min_2 = sw.c_sep_min_2;
    r.gamma_star_1 = sw.gamma_star_1;
    r.gamma_star_2 = sw.gamma_star_2;
    if (opts.weight) r.C_W = weighted_cq(info.Q, *opts.weight, opts.sing_tol);
  }
  if (opts.z) {
    try {
      r.C_g = c_g(cfi_matrix(p, GeneralDyneSetting(*opts.z)), opts.sing_tol);
    } catch (const SingularError&) {
      r.C_g.reset();
    }
  }
  return r;
}

std::string format_number(double v, int digits) {
  std::array<char, 64> buf{};
  const auto res = digits > 0
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, digits)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

using Field = std::variant<double BoundReport::*, std::optional<double> BoundReport::*,
                           bool BoundReport::*>;

struct Column {
  const char* name;
  Field field;
};

const std::array<Column, 24>& columns() {
  static const std::array<Column, 24> cols{{
      {"lambda1", &BoundReport::lambda1},
      {"lambda2", &BoundReport::lambda2},
      {"alpha", &BoundReport::alpha},
      {"theta", &BoundReport::theta},
      {"phi", &BoundReport::phi},
      {"z", &BoundReport::z},
      {"Q11", &BoundReport::Q11},
      {"Q12", &BoundReport::Q12},
      {"Q22", &BoundReport::Q22},
      {"U12", &BoundReport::U12},
      {"S", &BoundReport::S},
      {"C", &BoundReport::C},
      {"R", &BoundReport::R},
      {"T_I", &BoundReport::T_I},
      {"C_Q", &BoundReport::C_Q},
      {"bracket_T", &BoundReport::bracket_T},
      {"bracket_R", &BoundReport::bracket_R},
      {"C_sep_min_1", &BoundReport::C_sep_min_1},
      {"C_sep_min_2", &BoundReport::C_sep_min_2},
      {"gamma_star_1", &BoundReport::gamma_star_1},
      {"gamma_star_2", &BoundReport::gamma_star_2},
      {"C_g", &BoundReport::C_g},
      {"C_W", &BoundReport::C_W},
      {"singular", &BoundReport::singular},
  }};
  return cols;
}

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
  }
  return v;
}

double rounded(double v, int digits) {
  return digits > 0 && std::isfinite(v) ? parse_number(format_number(v, digits)) : v;
}

nlohmann::ordered_json to_json_object(const BoundReport& r, int digits) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const Column& c : columns()) {
    std::visit(
        [&](auto member) {
          using T = std::decay_t<decltype(r.*member)>;
          if constexpr (std::is_same_v<T, bool>) {
            obj[c.name] = r.*member;
          } else if constexpr (std::is_same_v<T, double>) {
            obj[c.name] = rounded(r.*member, digits);
          } else {
            const auto& o = r.*member;
            obj[c.name] = o ? nlohmann::ordered_json(rounded(*o, digits)) : nlohmann::ordered_json(nullptr);
          }
        },
        c.field);
  }
  return obj;
}

}  // namespace

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Column& c : columns()) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

std::string csv_header() {
  std::string out;
  for (const Column& c : columns()) {
    if (!out.empty()) out += ',';
    out += c.name;
  }
  return out;
}

std::string csv_row(const BoundReport& r, int digits) {
  std::string out;
  bool first = true;
  for (const Column& c : columns()) {
    if (!first) out += ',';
    first = false;
    std::visit(
        [&](auto member) {
          using T = std::decay_t<decltype(r.*member)>;
          if constexpr (std::is_same_v<T, bool>) {
            out += (r.*member) ? '1' : '0';
          } else if constexpr (std::is_same_v<T, double>) {
            out += format_number(r.*member, digits);
          } else {
            if (const auto& o = r.*member) out += format_number(*o, digits);
          }
        },
        c.field);
  }
  return out;
}

BoundReport parse_csv_row(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (cells.size() != columns().size()) {
    throw std::invalid_argument("parse_csv_row: expected " + std::to_string(columns().size()) +
                                " cells, got " + std::to_string(cells.size()));
  }

  BoundReport r;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string_view cell = cells[i];
    std::visit(
        [&](auto member) {
          using T = std::decay_t<decltype(r.*member)>;
          if constexpr (std::is_same_v<T, bool>) {
            if (cell != "0" && cell != "1") {
              throw std::invalid_argument("parse_csv_row: flag must be 0 or 1");
            }
            r.*member = cell == "1";
          } else if constexpr (std::is_same_v<T, double>) {
            r.*member = parse_number(cell);
          } else {
            if (cell.empty()) {
              (r.*member).reset();
            } else {
              r.*member = parse_number(cell);
            }
          }
        },
        columns()[i].field);
  }
  return r;
}

std::string to_json(const BoundReport& r, int digits) { return to_json_object(r, digits).dump(); }

std::string to_json(const std::vector<BoundReport>& rows, int digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BoundReport& r : rows) arr.push_back(to_json_object(r, digits));
  return arr.dump();
}

BoundReport report_from_json(std::string_view text) {
  const nlohmann::ordered_json obj = nlohmann::ordered_json::parse(text);
  if (!obj.is_object()) throw std::invalid_argument("report_from_json: expected an object");
  BoundReport r;
  for (const Column& c : columns()) {
    const nlohmann::ordered_json& v = obj.at(c.name);
    std::visit(
        [&](auto member) {
          using T = std::decay_t<decltype(r.*member)>;
          if constexpr (std::is_same_v<T, bool>) {
            r.*member = v.get<bool>();
          } else if constexpr (std::is_same_v<T, double>) {
            r.*member = v.get<double>();
          } else {
            if (v.is_null()) {
              (r.*member).reset();
            } else {
              r.*member = v.get<double>();
            }
          }
        },
        c.field);
  }
  return r;
}

}  // namespace sqscram
