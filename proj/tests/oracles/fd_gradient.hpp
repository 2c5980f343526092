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

// Central finite differences of the negative-sampling pair loss, evaluated
// in long double straight from raw rows. Shares no code with the trainer.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Row = std::vector<long double>;

inline long double log_sigmoid(long double s) {
  return s >= 0 ? -std::log1p(std::exp(-s)) : s - std::log1p(std::exp(s));
}

inline long double dotl(const Row& a, const Row& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Parameters touched by one pair: the center input row and the output rows
/// of the context and each negative (repeats allowed, they share storage via
/// `out_index`).
struct PairProblem {
  Row center;
  std::vector<Row> out_rows;           // distinct output rows
  std::size_t context = 0;             // index into out_rows
  std::vector<std::size_t> negatives;  // indices into out_rows

  long double loss() const {
    long double l = -log_sigmoid(dotl(center, out_rows[context]));
    for (auto n : negatives) l -= log_sigmoid(-dotl(center, out_rows[n]));
    return l;
  }
};

struct FdGradient {
  Row center;
  std::vector<Row> out_rows;
};

inline FdGradient central_differences(PairProblem p, long double h = 1e-5L) {
  FdGradient g;
  g.center.resize(p.center.size());
  for (std::size_t k = 0; k < p.center.size(); ++k) {
    const long double orig = p.center[k];
    p.center[k] = orig + h;
    const long double up = p.loss();
    p.center[k] = orig - h;
    const long double down = p.loss();
    p.center[k] = orig;
    g.center[k] = (up - down) / (2 * h);
  }
  g.out_rows.resize(p.out_rows.size());
  for (std::size_t r = 0; r < p.out_rows.size(); ++r) {
    g.out_rows[r].resize(p.out_rows[r].size());
    for (std::size_t k = 0; k < p.out_rows[r].size(); ++k) {
      const long double orig = p.out_rows[r][k];
      p.out_rows[r][k] = orig + h;
      const long double up = p.loss();
      p.out_rows[r][k] = orig - h;
      const long double down = p.loss();
      p.out_rows[r][k] = orig;
      g.out_rows[r][k] = (up - down) / (2 * h);
    }
  }
  return g;
}

/// |a - b| / max(|a|, |b|, floor): relative where the gradient is
/// non-negligible, absolute near zero.
inline double relative_error(long double a, long double b, long double floor = 1e-6L) {
  const long double scale = std::max({std::fabs(a), std::fabs(b), floor});
  return static_cast<double>(std::fabs(a - b) / scale);
}

}  // namespace oracle
