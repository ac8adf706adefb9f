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

#include <cstdlib>
#include <string_view>

#include "sqscram/kernels.hpp"

namespace sqscram::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar,
                                 &detail::band2_apply_scalar,
                                 &detail::caxpy_scalar,
                                 &detail::cdot_scalar,
                                 &detail::cdot_weighted_scalar,
                                 &detail::norm_sq_scalar,
                                 &detail::real_matvec_scalar};
  return table;
}

const KernelTable* avx2_table() {
#if defined(SQSCRAM_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  if (!supported) return nullptr;
  static const KernelTable table{Isa::kAvx2,
                                 &detail::band2_apply_avx2,
                                 &detail::caxpy_avx2,
                                 &detail::cdot_avx2,
                                 &detail::cdot_weighted_avx2,
                                 &detail::norm_sq_avx2,
                                 &detail::real_matvec_avx2};
  return &table;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("SQSCRAM_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace sqscram::kernels
