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

#include "sentivec/noise.hpp"

#include <cmath>

#include "sentivec/error.hpp"

namespace sentivec::embedding {

NoiseSampler::NoiseSampler(std::span<const std::uint64_t> counts, double power) {
  const std::size_t n = counts.size();
  probs_.resize(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    probs_[i] = counts[i] == 0 ? 0.0 : std::pow(static_cast<double>(counts[i]), power);
    total += probs_[i];
  }
  if (n == 0 || total <= 0.0) throw Error("embedding", "noise distribution has no mass");
  for (auto& p : probs_) p /= total;

  accept_.assign(n, 1.0);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::int32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    alias_[i] = static_cast<std::int32_t>(i);
    scaled[i] = probs_[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::int32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const auto s = small.back();
    small.pop_back();
    const auto l = large.back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (auto i : small) accept_[i] = 1.0;
  for (auto i : large) accept_[i] = 1.0;
}

std::int32_t NoiseSampler::sample(Rng& rng) const {
  const double u = uniform01(rng) * static_cast<double>(accept_.size());
  auto column = static_cast<std::size_t>(u);
  if (column >= accept_.size()) column = accept_.size() - 1;
  const double frac = u - static_cast<double>(column);
  return frac < accept_[column] ? static_cast<std::int32_t>(column) : alias_[column];
}

}  // namespace sentivec::embedding
