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

#include <cstddef>

#include "sqscram/kernels.hpp"

namespace sqscram::kernels::detail {

void band2_apply_scalar(std::span<const cplx> in, std::span<const double> w, cplx up, cplx down,
                        std::span<cplx> out) {
  const std::size_t n_total = in.size();
  for (std::size_t n = 0; n < n_total; ++n) {
    cplx acc{0.0, 0.0};
    if (n + 2 < n_total) acc += up * (w[n] * in[n + 2]);
    if (n >= 2) acc += down * (w[n - 2] * in[n - 2]);
    out[n] = acc;
  }
}

void caxpy_scalar(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

cplx cdot_scalar(std::span<const cplx> x, std::span<const cplx> y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx cdot_weighted_scalar(std::span<const cplx> x, std::span<const double> w,
                          std::span<const cplx> y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double yr = w[i] * y[i].real();
    const double yi = w[i] * y[i].imag();
    re += x[i].real() * yr + x[i].imag() * yi;
    im += x[i].real() * yi - x[i].imag() * yr;
  }
  return {re, im};
}

double norm_sq_scalar(std::span<const cplx> x) {
  double acc = 0.0;
  for (const cplx& v : x) acc += v.real() * v.real() + v.imag() * v.imag();
  return acc;
}

void real_matvec_scalar(const double* m, std::size_t rows, std::size_t cols,
                        std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      re += row[c] * x[c].real();
      im += row[c] * x[c].imag();
    }
    y[r] = {re, im};
  }
}

}  // namespace sqscram::kernels::detail
