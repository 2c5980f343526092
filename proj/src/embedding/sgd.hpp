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

#include <cmath>
#include <span>
#include <vector>

#include "sentivec/embedding.hpp"
#include "sentivec/simd/kernels.hpp"

namespace sentivec::embedding::detail {

inline double sigmoid(double s) noexcept {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

// log(1 + e^x) without overflow.
inline double softplus(double x) noexcept {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

/// Reusable buffers so the training loop does not allocate per pair.
struct StepScratch {
  std::vector<double> grad_center;
  std::vector<double> coef;
};

/// Unchecked SGD step. Returns the pre-update loss.
inline double sgd_step(Matrix& input, Matrix& output, WordId center, WordId context,
                       std::span<const WordId> negatives, double lr, bool freeze_center,
                       StepScratch& scratch) {
  const auto& k = simd::active();
  const std::size_t d = input.cols();
  double* w_center = input.row(static_cast<std::size_t>(center)).data();

  const std::size_t targets = negatives.size() + 1;
  scratch.coef.resize(targets);
  scratch.grad_center.assign(d, 0.0);

  auto target_at = [&](std::size_t j) { return j == 0 ? context : negatives[j - 1]; };

  double loss = 0.0;
  for (std::size_t j = 0; j < targets; ++j) {
    const double* w_out = output.row(static_cast<std::size_t>(target_at(j))).data();
    const double s = k.dot(w_center, w_out, d);
    const double label = j == 0 ? 1.0 : 0.0;
    // -log s(s) for the context, -log s(-s) for negatives
    loss += j == 0 ? softplus(-s) : softplus(s);
    scratch.coef[j] = lr * (label - sigmoid(s));
  }
  for (std::size_t j = 0; j < targets; ++j) {
    const double* w_out = output.row(static_cast<std::size_t>(target_at(j))).data();
    k.axpy(scratch.coef[j], w_out, scratch.grad_center.data(), d);
  }
  for (std::size_t j = 0; j < targets; ++j) {
    double* w_out = output.row(static_cast<std::size_t>(target_at(j))).data();
    k.axpy(scratch.coef[j], w_center, w_out, d);
  }
  if (!freeze_center) k.axpy(1.0, scratch.grad_center.data(), w_center, d);
  return loss;
}

}  // namespace sentivec::embedding::detail
