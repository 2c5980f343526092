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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sentivec/diffing.hpp"
#include "sentivec/error.hpp"
#include "sentivec/rng.hpp"
#include "sentivec/simd/kernels.hpp"

namespace sentivec::diffing {
namespace {

const std::string kModule = "diffing";

using Vec = std::vector<double>;

double norm(const Vec& v) { return std::sqrt(simd::dot(v, v)); }

// Removes the projections of v onto the (orthonormal) basis.
void orthogonalize(Vec& v, const std::vector<Vec>& basis) {
  for (const auto& b : basis) simd::axpy(-simd::dot(v, b), b, v);
}

void fix_sign(Vec& v) {
  const auto it = std::max_element(v.begin(), v.end(),
                                   [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (it != v.end() && *it < 0.0) simd::scale(-1.0, v);
}

// Any unit vector orthogonal to `basis`, built from the standard basis.
Vec orthogonal_fallback(std::size_t d, const std::vector<Vec>& basis) {
  for (std::size_t j = 0; j < d; ++j) {
    Vec e(d, 0.0);
    e[j] = 1.0;
    orthogonalize(e, basis);
    orthogonalize(e, basis);
    const double n = norm(e);
    if (n > 1e-6) {
      simd::scale(1.0 / n, e);
      return e;
    }
  }
  return Vec(d, 0.0);
}

}  // namespace

PcaResult principal_components(const std::vector<std::vector<double>>& points, std::size_t k,
                               const PowerIterationConfig& cfg) {
  if (points.empty()) throw Error(kModule, "PCA needs at least one point");
  const std::size_t d = points.front().size();
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(kModule, "PCA points must share one dimension");
  }
  PcaResult out;
  out.mean.assign(d, 0.0);
  for (const auto& p : points) simd::axpy(1.0, p, out.mean);
  simd::scale(1.0 / static_cast<double>(n), out.mean);

  // Sample covariance, d x d, row-major.
  std::vector<Vec> centered(points);
  for (auto& p : centered) simd::axpy(-1.0, out.mean, p);
  std::vector<Vec> cov(d, Vec(d, 0.0));
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      double s = 0.0;
      for (const auto& p : centered) s += p[a] * p[b];
      cov[a][b] = cov[b][a] = s / denom;
    }
  }

  Rng rng = make_rng(0x706361 /* pca */);
  k = std::min(k, d);
  Vec next(d);
  for (std::size_t c = 0; c < k; ++c) {
    Vec v(d);
    for (auto& x : v) x = uniform01(rng) - 0.5;
    orthogonalize(v, out.components);
    double vn = norm(v);
    if (vn <= 1e-12) {
      v = orthogonal_fallback(d, out.components);
    } else {
      simd::scale(1.0 / vn, v);
    }
    double lambda = 0.0;
    for (int it = 0; it < cfg.max_iterations; ++it) {
      // next = (C - sum_j lambda_j v_j v_j^T) v; the deflation terms vanish
      // after re-orthogonalizing against the earlier components.
      for (std::size_t a = 0; a < d; ++a) next[a] = simd::dot(cov[a], v);
      orthogonalize(next, out.components);
      const double nn = norm(next);
      if (nn <= 1e-300) {
        lambda = 0.0;
        break;
      }
      simd::scale(1.0 / nn, next);
      lambda = nn;
      const double change = std::sqrt(simd::squared_distance(next, v));
      v.swap(next);
      if (change < cfg.tolerance) break;
    }
    // Rayleigh quotient for the reported variance.
    for (std::size_t a = 0; a < d; ++a) next[a] = simd::dot(cov[a], v);
    lambda = std::max(0.0, simd::dot(v, next));
    fix_sign(v);
    out.components.push_back(std::move(v));
    out.variances.push_back(lambda);
  }
  // Power iteration can stop short when eigenvalues nearly coincide; keep
  // the components ordered by the variance they actually capture.
  std::vector<std::size_t> order(out.components.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.variances[a] > out.variances[b];
  });
  PcaResult sorted;
  sorted.mean = std::move(out.mean);
  for (auto i : order) {
    sorted.components.push_back(std::move(out.components[i]));
    sorted.variances.push_back(out.variances[i]);
  }
  return sorted;
}

Projection project_2d(const embedding::EmbeddingModel& model, const std::vector<std::string>& words,
                      const PowerIterationConfig& cfg) {
  if (model.dim < 2) throw Error(kModule, "project_2d needs d >= 2");
  std::vector<std::string> used;
  std::vector<std::vector<double>> points;
  for (const auto& w : words) {
    const auto id = model.vocab.find(w);
    if (!id) continue;
    used.push_back(w);
    const auto v = model.vector(*id);
    points.emplace_back(v.begin(), v.end());
  }
  if (points.size() < 3) {
    throw Error(kModule,
                "project_2d needs at least 3 in-vocab words, got " + std::to_string(points.size()));
  }
  const PcaResult pca = principal_components(points, 2, cfg);
  Projection out;
  out.variance_x = pca.variances[0];
  out.variance_y = pca.variances[1];
  std::vector<double> centered(model.dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::copy(points[i].begin(), points[i].end(), centered.begin());
    simd::axpy(-1.0, pca.mean, centered);
    out.coords.emplace_back(used[i], std::make_pair(simd::dot(centered, pca.components[0]),
                                                    simd::dot(centered, pca.components[1])));
  }
  return out;
}

}  // namespace sentivec::diffing
