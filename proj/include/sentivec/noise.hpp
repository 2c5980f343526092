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

#include <cstdint>
#include <span>
#include <vector>

#include "sentivec/rng.hpp"

namespace sentivec::embedding {

/// Draws word ids from the unigram distribution raised to `power` (0.75 for
/// negative sampling) in O(1) per draw with Vose's alias method.
class NoiseSampler {
 public:
  NoiseSampler() = default;
  /// Throws if every count is zero.
  explicit NoiseSampler(std::span<const std::uint64_t> counts, double power = 0.75);

  std::int32_t sample(Rng& rng) const;

  /// Target probability of each id.
  const std::vector<double>& probabilities() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

 private:
  std::vector<double> probs_;
  std::vector<double> accept_;
  std::vector<std::int32_t> alias_;
};

}  // namespace sentivec::embedding
