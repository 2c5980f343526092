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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentivec/embedding.hpp"

namespace sentivec::sentiment {

enum class Polarity { positive, negative };

/// Outcome of scoring one word. `unknown` is reserved for out-of-vocabulary
/// words, `tie` for equal distances within kTieTolerance.
enum class Label { positive, negative, tie, unknown };

std::string_view to_string(Polarity p) noexcept;
std::string_view to_string(Label l) noexcept;
std::optional<Label> parse_label(std::string_view s) noexcept;
inline Label to_label(Polarity p) noexcept {
  return p == Polarity::positive ? Label::positive : Label::negative;
}

struct SentimentLexicon {
  std::map<std::string, Polarity> entries;
  std::string source_tag;
  /// Words dropped while loading because one file listed them with both signs.
  std::size_t dropped_conflicts = 0;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
};

/// Polarity column spelling: "+"/"-" or "positive"/"negative".
enum class LexiconFormat { signs, words };

/// TSV lines `word<TAB>polarity`. Repeated identical lines collapse; a word
/// listed with both polarities is dropped and counted in dropped_conflicts.
SentimentLexicon parse_lexicon(std::string_view text, std::string source_tag,
                               LexiconFormat format = LexiconFormat::signs);
SentimentLexicon load_lexicon(const std::string& path, LexiconFormat format = LexiconFormat::signs);
void save_lexicon(const SentimentLexicon& lex, const std::string& path);

/// Union of both lexicons minus the words on which they disagree.
SentimentLexicon merge_lexicons(const SentimentLexicon& a, const SentimentLexicon& b);

struct SeedConfig {
  double magnitude = 1.0;
  bool scale_by_dim = false;
  int retrain_epochs = 1;
  /// Ablation switch: keep seed input vectors fixed during retraining.
  bool freeze_seeds = false;

  /// Value written into every seed coordinate for dimension `dim`.
  double component(std::size_t dim) const;
};

struct SeedCounts {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t skipped_oov = 0;
};

/// Overwrites the input row of every in-vocab lexicon word with +m (positive)
/// or -m (negative) in each coordinate, m = magnitude (/ sqrt(d) if
/// scale_by_dim). Output rows are untouched; the model becomes Stage::seeded.
SeedCounts inject_seeds(embedding::EmbeddingModel& model, const SentimentLexicon& lex,
                        const SeedConfig& cfg);

/// Further training of a seeded model for seed_cfg.retrain_epochs epochs with
/// the other hyperparameters from `cfg`. `seeds` is needed only when
/// freeze_seeds is set.
embedding::TrainStats seeded_retrain(embedding::EmbeddingModel& model,
                                     const corpus::TokenStream& tokens,
                                     const embedding::TrainConfig& cfg, const SeedConfig& seed_cfg,
                                     const SentimentLexicon* seeds = nullptr);

enum class Metric { cosine, euclidean };

std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view s) noexcept;

/// Cosine distance is 1 - cosine similarity (1 when either vector is zero).
double distance(Metric m, std::span<const double> a, std::span<const double> b);

constexpr double kTieTolerance = 1e-9;

struct PolarityScorer {
  std::vector<double> pos_centroid;
  std::vector<double> neg_centroid;
  Metric metric = Metric::cosine;
  std::size_t pos_seeds = 0;
  std::size_t neg_seeds = 0;
};

/// Means of the in-vocab positive and negative seed rows.
PolarityScorer centroids(const embedding::EmbeddingModel& model, const SentimentLexicon& lex,
                         Metric metric = Metric::cosine);

struct PolarityScore {
  Label label = Label::unknown;
  double d_pos = 0.0;
  double d_neg = 0.0;

  /// |d_pos - d_neg|, 0 for unknown words.
  double margin() const noexcept;
};

/// Label from the nearer centroid; tie when the distances differ by at most
/// kTieTolerance.
PolarityScore score(const PolarityScorer& scorer, const embedding::EmbeddingModel& model,
                    std::string_view word);
Label polarity(const PolarityScorer& scorer, const embedding::EmbeddingModel& model,
               std::string_view word);

/// Fraction of gold words whose predicted label matches; tie and unknown
/// count as wrong. Throws on an empty gold set or a gold word without a
/// prediction.
double precision(const std::map<std::string, Label>& predicted,
                 const std::map<std::string, Polarity>& gold);

/// `word<TAB>label<TAB>d_pos<TAB>d_neg` per word, in the given order.
void write_polarity_report(const std::string& path,
                           const std::vector<std::pair<std::string, PolarityScore>>& rows);

}  // namespace sentivec::sentiment
