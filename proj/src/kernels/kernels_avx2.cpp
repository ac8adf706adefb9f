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

// Compiled with -mavx2 -mfma; only reached after a runtime CPUID check.

#include <immintrin.h>

#include <cstddef>

#include "sqscram/kernels.hpp"

namespace sqscram::kernels::detail {

namespace {

// A __m256d holds two complex numbers: [re0, im0, re1, im1].

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// (ar + i ai) * v for both complex lanes of v.
inline __m256d cmul_scalar(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

// [w0, w0, w1, w1] from w[0], w[1].
inline __m256d pair_weights(const double* w) {
  const __m128d w2 = _mm_loadu_pd(w);
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0b01010000);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Returns sum(conj(x) * y) given acc_direct = sum x*y lanewise and acc_swap = sum x*swap(y).
inline cplx finish_cdot(__m256d acc_direct, __m256d acc_swap) {
  alignas(32) double s[4];
  _mm256_store_pd(s, acc_swap);
  return {hsum(acc_direct), (s[0] + s[2]) - (s[1] + s[3])};
}

}  // namespace

void band2_apply_avx2(std::span<const cplx> in, std::span<const double> w, cplx up, cplx down,
                      std::span<cplx> out) {
  const std::size_t n_total = in.size();
  const __m256d up_r = _mm256_set1_pd(up.real());
  const __m256d up_i = _mm256_set1_pd(up.imag());
  const __m256d dn_r = _mm256_set1_pd(down.real());
  const __m256d dn_i = _mm256_set1_pd(down.imag());
  const double* src = as_doubles(in.data());
  double* dst = as_doubles(out.data());

  // Rows 0,1 only see the raising term from above; rows n_total-2, n_total-1 only the lowering.
  std::size_t n = 0;
  for (; n < 2 && n < n_total; ++n) {
    out[n] = (n + 2 < n_total) ? up * (w[n] * in[n + 2]) : cplx{0.0, 0.0};
  }
  for (; n + 3 < n_total; n += 2) {
    const __m256d from_above = _mm256_mul_pd(pair_weights(w.data() + n),
                                             _mm256_loadu_pd(src + 2 * (n + 2)));
    const __m256d from_below = _mm256_mul_pd(pair_weights(w.data() + n - 2),
                                             _mm256_loadu_pd(src + 2 * (n - 2)));
    const __m256d r = _mm256_add_pd(cmul_scalar(up_r, up_i, from_above),
                                    cmul_scalar(dn_r, dn_i, from_below));
    _mm256_storeu_pd(dst + 2 * n, r);
  }
  for (; n < n_total; ++n) {
    cplx acc{0.0, 0.0};
    if (n + 2 < n_total) acc += up * (w[n] * in[n + 2]);
    if (n >= 2) acc += down * (w[n - 2] * in[n - 2]);
    out[n] = acc;
  }
}

void caxpy_avx2(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xs = as_doubles(x.data());
  double* ys = as_doubles(y.data());
  std::size_t i = 0;
  for (; i + 2 <= x.size(); i += 2) {
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i,
                     _mm256_add_pd(yv, cmul_scalar(ar, ai, _mm256_loadu_pd(xs + 2 * i))));
  }
  for (; i < x.size(); ++i) y[i] += a * x[i];
}

cplx cdot_avx2(std::span<const cplx> x, std::span<const cplx> y) {
  const double* xs = as_doubles(x.data());
  const double* ys = as_doubles(y.data());
  __m256d direct = _mm256_setzero_pd();
  __m256d swapped = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= x.size(); i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    swapped = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), swapped);
  }
  cplx result = finish_cdot(direct, swapped);
  for (; i < x.size(); ++i) result += std::conj(x[i]) * y[i];
  return result;
}

cplx cdot_weighted_avx2(std::span<const cplx> x, std::span<const double> w,
                        std::span<const cplx> y) {
  const double* xs = as_doubles(x.data());
  const double* ys = as_doubles(y.data());
  __m256d direct = _mm256_setzero_pd();
  __m256d swapped = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= x.size(); i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_mul_pd(pair_weights(w.data() + i), _mm256_loadu_pd(ys + 2 * i));
    direct = _mm256_fmadd_pd(xv, yv, direct);
    swapped = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), swapped);
  }
  cplx result = finish_cdot(direct, swapped);
  for (; i < x.size(); ++i) result += std::conj(x[i]) * (w[i] * y[i]);
  return result;
}

double norm_sq_avx2(std::span<const cplx> x) {
  const double* xs = as_doubles(x.data());
  const std::size_t n = 2 * x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d a = _mm256_loadu_pd(xs + i);
    const __m256d b = _mm256_loadu_pd(xs + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double total = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += xs[i] * xs[i];
  return total;
}

void real_matvec_avx2(const double* m, std::size_t rows, std::size_t cols,
                      std::span<const cplx> x, std::span<cplx> y) {
  const double* xs = as_doubles(x.data());
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = m + r * cols;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      const __m256d coeffs = _mm256_loadu_pd(row + c);
      const __m256d c01 = _mm256_permute4x64_pd(coeffs, 0b01010000);
      const __m256d c23 = _mm256_permute4x64_pd(coeffs, 0b11111010);
      acc0 = _mm256_fmadd_pd(c01, _mm256_loadu_pd(xs + 2 * c), acc0);
      acc1 = _mm256_fmadd_pd(c23, _mm256_loadu_pd(xs + 2 * c + 4), acc1);
    }
    const __m256d acc = _mm256_add_pd(acc0, acc1);
    const __m128d folded =
        _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    alignas(16) double pair[2];
    _mm_store_pd(pair, folded);
    double re = pair[0];
    double im = pair[1];
    for (; c < cols; ++c) {
      re += row[c] * x[c].real();
      im += row[c] * x[c].imag();
    }
    y[r] = {re, im};
  }
}

}  // namespace sqscram::kernels::detail
