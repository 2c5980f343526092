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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentivec/embedding.hpp"
#include "sentivec/sentiment.hpp"

namespace sentivec::diffing {

enum class Status { agree, flip, uncomparable };

std::string_view to_string(Status s) noexcept;

/// One model taking part in a comparison, scored with its own scorer.
struct ModelView {
  std::string name;
  const embedding::EmbeddingModel* model = nullptr;
  const sentiment::PolarityScorer* scorer = nullptr;
};

struct FlipRow {
  std::string word;
  std::vector<sentiment::Label> labels;  // one per model, in model order
  Status status = Status::agree;

  friend bool operator==(const FlipRow&, const FlipRow&) = default;
};

struct FlipReport {
  std::vector<std::string> model_names;
  std::vector<FlipRow> rows;  // sorted by word

  std::size_t count(Status s) const noexcept;
  friend bool operator==(const FlipReport&, const FlipReport&) = default;
};

struct CompareOptions {
  /// Labels whose distance margin |d_pos - d_neg| is below this value are
  /// reported as ties, which keeps near-equidistant words from showing up
  /// as flips against a confident label of the same sign. 0 disables it.
  double min_margin = 0.0;
};

/// uncomparable if any label is unknown, flip if the known labels are not
/// all equal, agree otherwise.
Status classify_labels(const std::vector<sentiment::Label>& labels) noexcept;

/// Labels each requested word under every model. Needs at least two models
/// with distinct names; repeated words produce a single row.
FlipReport compare_models(const std::vector<ModelView>& models,
                          const std::vector<std::string>& words,
                          const CompareOptions& options = {});

enum class ReportFormat { tsv, jsonl };

/// TSV: header `word, <model names...>, status`; JSONL: one object per word.
void emit_report(const FlipReport& report, const std::string& path, ReportFormat format);
std::string format_report(const FlipReport& report, ReportFormat format);
/// Inverse of the TSV form.
FlipReport parse_report_tsv(std::string_view text);

/// Top principal axes of a point set, found by power iteration with
/// deflation.
struct PcaResult {
  std::vector<std::vector<double>> components;  // unit vectors, descending variance
  std::vector<double> variances;                // eigenvalues of the covariance
  std::vector<double> mean;
};

struct PowerIterationConfig {
  double tolerance = 1e-10;
  int max_iterations = 1000;
};

/// `points` are rows of equal length d; returns min(k, d) components. Each
/// component's largest-magnitude entry is made positive.
PcaResult principal_components(const std::vector<std::vector<double>>& points, std::size_t k,
                               const PowerIterationConfig& cfg = {});

struct Projection {
  std::vector<std::pair<std::string, std::pair<double, double>>> coords;  // input order
  double variance_x = 0.0;
  double variance_y = 0.0;
};

/// Mean-centers the selected word vectors and projects them on the top two
/// principal components. Out-of-vocabulary words are skipped; at least three
/// in-vocab words and d >= 2 are required.
Projection project_2d(const embedding::EmbeddingModel& model, const std::vector<std::string>& words,
                      const PowerIterationConfig& cfg = {});

/// `model<TAB>word<TAB>x<TAB>y` rows after a header line.
void write_projections(const std::string& path,
                       const std::vector<std::pair<std::string, Projection>>& projections);

}  // namespace sentivec::diffing
