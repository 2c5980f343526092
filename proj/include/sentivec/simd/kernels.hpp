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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision vector kernels used by the training loop, the
// polarity scorer, the SVM kernel and the PCA projection. Every kernel has a
// scalar reference implementation and, where the CPU allows, an AVX2+FMA
// variant picked once at runtime.

namespace sentivec::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Raw kernel entry points for one instruction set. Lengths are element
/// counts; pointers may alias only where noted.
struct KernelTable {
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += a * x; x and y must not overlap.
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*squared_distance)(const double* x, const double* y, std::size_t n);
  // x *= a
  void (*scale)(double a, double* x, std::size_t n);
};

namespace scalar {
const KernelTable& table() noexcept;
}

/// True when the AVX2 variants were compiled in and the running CPU
/// supports AVX2 and FMA.
bool avx2_available() noexcept;

/// Table for `isa`. Requesting avx2 when unavailable returns the scalar table.
const KernelTable& table_for(Isa isa) noexcept;

/// ISA used by the free functions below. Defaults to the best available,
/// unless the environment variable SENTIVEC_ISA=scalar is set.
Isa active_isa() noexcept;

/// Forces the ISA used by the free functions (tests, reproducibility across
/// machines). Falls back to scalar if avx2 is unavailable.
void set_active_isa(Isa isa) noexcept;

const KernelTable& active() noexcept;

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}

inline double squared_distance(std::span<const double> x, std::span<const double> y) {
  return active().squared_distance(x.data(), y.data(), x.size());
}

inline void scale(double a, std::span<double> x) { active().scale(a, x.data(), x.size()); }

}  // namespace sentivec::simd
