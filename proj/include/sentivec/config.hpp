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
#include <string>
#include <string_view>
#include <vector>

#include "sentivec/classify.hpp"
#include "sentivec/diffing.hpp"
#include "sentivec/embedding.hpp"
#include "sentivec/sentiment.hpp"

namespace sentivec {

/// Every tunable of the command-line pipeline. Loaded from a flat
/// `key = value` file (`#` starts a comment line); unknown keys and values
/// of the wrong type are rejected.
struct PipelineConfig {
  embedding::TrainConfig train;
  sentiment::SeedConfig seeding;
  classify::SvmConfig svm;
  std::uint64_t min_count = corpus::kDefaultMinCount;
  sentiment::Metric metric = sentiment::Metric::cosine;
  double min_margin = 0.0;
  double split_fraction = 0.8;
  classify::Weighting weighting = classify::Weighting::uniform;
  diffing::ReportFormat report_format = diffing::ReportFormat::tsv;

  // Input paths have no default.
  std::string corpus;
  std::string stopwords;
  std::string vocab;
  std::vector<std::string> lexicons;
  std::string typical;
  std::string wordlist;
  std::string pretrained;
  std::string labeled_docs;

  /// Sets one key; throws Error("cli", ...) for unknown keys or bad values.
  void set(std::string_view key, std::string_view value);
  /// Applies every assignment in a config document. `origin` names it in errors.
  void apply_text(std::string_view text, const std::string& origin);
  void apply_file(const std::string& path);

  static const std::vector<std::string>& keys();
};

}  // namespace sentivec
