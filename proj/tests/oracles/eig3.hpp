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

// Closed-form eigendecomposition of a symmetric 3x3 matrix (trigonometric
// solution of the characteristic cubic, eigenvectors from cross products).

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace oracle {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

struct Eigen3 {
  std::array<double, 3> values;  // descending
  std::array<Vec3, 3> vectors;   // unit, matching values
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

inline Eigen3 symmetric_eigen3(const Mat3& a) {
  Eigen3 out{};
  const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  if (p1 == 0.0) {
    out.values = {a[0][0], a[1][1], a[2][2]};
  } else {
    const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                      (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    out.values = {e1, 3.0 * q - e1 - e3, e3};
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  for (int k = 0; k < 3; ++k) {
    Mat3 m = a;
    for (int i = 0; i < 3; ++i) m[i][i] -= out.values[k];
    // The null vector is the largest cross product of two rows.
    Vec3 best{};
    double best_norm = -1.0;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const Vec3 c = cross(m[i], m[j]);
      const double n = norm3(c);
      if (n > best_norm) {
        best_norm = n;
        best = c;
      }
    }
    for (auto& x : best) x /= best_norm;
    out.vectors[k] = best;
  }
  return out;
}

}  // namespace oracle
