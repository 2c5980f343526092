// Copyright 2026 The sentivec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "sentivec/simd/kernels.hpp"

namespace sentivec::simd {

#if defined(SENTIVEC_WITH_AVX2)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif

namespace {

Isa detect_default() noexcept {
  if (const char* forced = std::getenv("SENTIVEC_ISA")) {
    if (std::string_view(forced) == "scalar") return Isa::scalar;
  }
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active_slot() noexcept {
  static std::atomic<Isa> slot{detect_default()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

bool avx2_available() noexcept {
#if defined(SENTIVEC_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

const KernelTable& table_for(Isa isa) noexcept {
#if defined(SENTIVEC_WITH_AVX2)
  if (isa == Isa::avx2 && avx2_available()) return avx2::table();
#else
  (void)isa;
#endif
  return scalar::table();
}

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) noexcept {
  if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
  active_slot().store(isa, std::memory_order_relaxed);
}

const KernelTable& active() noexcept { return table_for(active_isa()); }

}  // namespace sentivec::simd
