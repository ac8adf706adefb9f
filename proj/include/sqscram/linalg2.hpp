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

#include <array>
#include <cmath>

namespace sqscram {

/// Real 2-vector.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Real 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diag(double x, double y) { return {x, 0.0, 0.0, y}; }
  static constexpr Mat2 symmetric(double xx, double xy, double yy) { return {xx, xy, xy, yy}; }
  static constexpr Mat2 antisymmetric(double xy) { return {0.0, xy, -xy, 0.0}; }

  double operator()(int i, int j) const {
    return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d);
  }

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  double frobenius_sq() const { return a * a + b * b + c * c + d * d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  /// No singularity check; callers decide what "singular" means.
  Mat2 inverse() const {
    const double inv = 1.0 / det();
    return {d * inv, -b * inv, -c * inv, a * inv};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Eigenvalues of the symmetric part of `m`, ascending.
inline std::array<double, 2> symmetric_eigenvalues(const Mat2& m) {
  const double off = 0.5 * (m.b + m.c);
  const double mean = 0.5 * (m.a + m.d);
  const double half_diff = 0.5 * (m.a - m.d);
  const double r = std::hypot(half_diff, off);
  return {mean - r, mean + r};
}

inline double max_abs_entry(const Mat2& m) {
  return std::fmax(std::fmax(std::fabs(m.a), std::fabs(m.b)),
                   std::fmax(std::fabs(m.c), std::fabs(m.d)));
}

}  // namespace sqscram
