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

// Data-parallel inner loops of the Fock-space oracle.
//
// Every kernel has a portable scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The variant is chosen once at runtime from CPUID; setting the
// environment variable SQSCRAM_KERNELS=scalar forces the reference path. Complex
// vectors are std::complex<double>, i.e. interleaved (re, im) pairs.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace sqscram::kernels {

using cplx = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  /// out[n] = up * w[n] * in[n+2] + down * w[n-2] * in[n-2], out-of-range terms dropped.
  /// With w[n] = sqrt((n+1)(n+2)) this is (up * a^2 + down * a^dag^2) applied to `in`.
  /// Requires w.size() >= in.size() and out.size() == in.size(); `out` must not alias `in`.
  void (*band2_apply)(std::span<const cplx> in, std::span<const double> w, cplx up, cplx down,
                      std::span<cplx> out);

  /// y += a * x
  void (*caxpy)(cplx a, std::span<const cplx> x, std::span<cplx> y);

  /// sum_n conj(x[n]) * y[n]
  cplx (*cdot)(std::span<const cplx> x, std::span<const cplx> y);

  /// sum_n conj(x[n]) * w[n] * y[n]
  cplx (*cdot_weighted)(std::span<const cplx> x, std::span<const double> w,
                        std::span<const cplx> y);

  /// sum_n |x[n]|^2
  double (*norm_sq)(std::span<const cplx> x);

  /// y = M x for a real row-major rows x cols matrix M.
  void (*real_matvec)(const double* m, std::size_t rows, std::size_t cols,
                      std::span<const cplx> x, std::span<cplx> y);
};

const KernelTable& scalar_table();

/// nullptr when the binary was built without AVX2 support or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

/// Best table for this CPU, honouring SQSCRAM_KERNELS. Resolved once.
const KernelTable& active();

inline void band2_apply(std::span<const cplx> in, std::span<const double> w, cplx up, cplx down,
                        std::span<cplx> out) {
  active().band2_apply(in, w, up, down, out);
}
inline void caxpy(cplx a, std::span<const cplx> x, std::span<cplx> y) { active().caxpy(a, x, y); }
inline cplx cdot(std::span<const cplx> x, std::span<const cplx> y) { return active().cdot(x, y); }
inline cplx cdot_weighted(std::span<const cplx> x, std::span<const double> w,
                          std::span<const cplx> y) {
  return active().cdot_weighted(x, w, y);
}
inline double norm_sq(std::span<const cplx> x) { return active().norm_sq(x); }
inline void real_matvec(const double* m, std::size_t rows, std::size_t cols,
                        std::span<const cplx> x, std::span<cplx> y) {
  active().real_matvec(m, rows, cols, x, y);
}

namespace detail {
// Per-ISA entry points, defined in src/kernels/.
void band2_apply_scalar(std::span<const cplx>, std::span<const double>, cplx, cplx,
                        std::span<cplx>);
void caxpy_scalar(cplx, std::span<const cplx>, std::span<cplx>);
cplx cdot_scalar(std::span<const cplx>, std::span<const cplx>);
cplx cdot_weighted_scalar(std::span<const cplx>, std::span<const double>, std::span<const cplx>);
double norm_sq_scalar(std::span<const cplx>);
void real_matvec_scalar(const double*, std::size_t, std::size_t, std::span<const cplx>,
                        std::span<cplx>);

#if defined(SQSCRAM_HAVE_AVX2)
void band2_apply_avx2(std::span<const cplx>, std::span<const double>, cplx, cplx,
                      std::span<cplx>);
void caxpy_avx2(cplx, std::span<const cplx>, std::span<cplx>);
cplx cdot_avx2(std::span<const cplx>, std::span<const cplx>);
cplx cdot_weighted_avx2(std::span<const cplx>, std::span<const double>, std::span<const cplx>);
double norm_sq_avx2(std::span<const cplx>);
void real_matvec_avx2(const double*, std::size_t, std::size_t, std::span<const cplx>,
                      std::span<cplx>);
#endif
}  // namespace detail

}  // namespace sqscram::kernels
