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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sentivec/embedding.hpp"
#include "sentivec/rng.hpp"

namespace sentivec::classify {

struct DocFeature {
  std::vector<double> vector;
  double oov_fraction = 0.0;
};

enum class Weighting { uniform, frequency };

/// Weight given to a distinct in-vocab word that occurs `occurrences` times
/// in the document. The feature is the weight-normalized sum of word vectors.
using WeightFn = std::function<double(corpus::WordId word, std::size_t occurrences)>;

/// uniform: mean over in-vocab token occurrences. frequency: the same mean
/// computed per distinct word weighted by its count. All-OOV documents give
/// the zero vector with oov_fraction 1.
DocFeature doc_vector(const embedding::EmbeddingModel& model, std::span<const std::string> tokens,
                      Weighting weighting = Weighting::uniform);
DocFeature doc_vector(const embedding::EmbeddingModel& model, std::span<const std::string> tokens,
                      const WeightFn& weight);

/// exp(-gamma * |x - y|^2)
double rbf(std::span<const double> x, std::span<const double> y, double gamma);

struct Example {
  DocFeature feature;
  int label = 1;  // +1 or -1
};

struct LabeledSet {
  std::vector<Example> items;

  std::size_t size() const noexcept { return items.size(); }
  bool has_both_classes() const noexcept;
};

/// Shuffled partition with round-half-to-even(train_fraction * n) training
/// items. Throws when either side would be empty or the training side holds
/// a single class.
std::pair<LabeledSet, LabeledSet> split(const LabeledSet& data, double train_fraction, Rng& rng);

struct SvmConfig {
  double C = 1.0;
  double gamma = 0.7;
  double tol = 1e-3;
  /// Cap on two-multiplier updates; 0 means 10 * n^2.
  std::size_t max_updates = 0;
};

struct SvmModel {
  std::vector<std::vector<double>> support_vectors;
  std::vector<double> coef;  // alpha_i * y_i
  double bias = 0.0;
  double gamma = 0.7;
  double C = 1.0;

  std::size_t dim() const noexcept {
    return support_vectors.empty() ? 0 : support_vectors.front().size();
  }
};

/// Full dual solution, kept for diagnostics and KKT checks.
struct SmoSolution {
  std::vector<double> alpha;  // one per training item, in [0, C]
  double bias = 0.0;
  std::size_t updates = 0;
  double final_gap = 0.0;  // max violating-pair gap at exit
};

/// Sequential minimal optimization with maximal-violating-pair selection.
/// Stops when the gap drops below cfg.tol; throws Error("classify", ...)
/// on single-class input or when the update cap is hit first.
SmoSolution solve_dual(const LabeledSet& train, const SvmConfig& cfg);

SvmModel train_svm(const LabeledSet& train, const SvmConfig& cfg);
/// Packages a dual solution as a model holding only the non-zero multipliers.
SvmModel make_model(const LabeledSet& train, const SmoSolution& sol, const SvmConfig& cfg);

/// sum_i coef_i * K(sv_i, x) + bias
double decision_value(const SvmModel& svm, std::span<const double> x);
/// sign of the decision value; exactly 0 maps to +1.
int predict(const SvmModel& svm, const DocFeature& feature);
double evaluate(const SvmModel& svm, const LabeledSet& test);

/// Versioned text dump: "sentivec-svm 1", gamma, C, b, "sv <count> <dim>",
/// then "<coef> <x1> ... <xd>" per support vector.
void save_svm(const SvmModel& svm, const std::string& path);
SvmModel load_svm(const std::string& path);

/// TSV `label<TAB>space-separated tokens`, label +1 or -1.
std::vector<std::pair<int, std::vector<std::string>>> load_labeled_docs(const std::string& path);

LabeledSet featurize(const embedding::EmbeddingModel& model,
                     const std::vector<std::pair<int, std::vector<std::string>>>& docs,
                     Weighting weighting = Weighting::uniform);

}  // namespace sentivec::classify
