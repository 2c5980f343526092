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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentivec/corpus.hpp"
#include "sentivec/rng.hpp"

namespace sentivec::embedding {

using corpus::WordId;

/// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class Stage { general, domain, seeded };

std::string_view stage_name(Stage s) noexcept;

/// Skip-gram parameters: `input` holds the word vectors (the hidden layer is
/// exactly the center word's row), `output` the context weights.
struct EmbeddingModel {
  corpus::Vocab vocab;
  std::size_t dim = 0;
  Matrix input;
  Matrix output;
  int trained_epochs = 0;
  Stage stage = Stage::general;

  std::span<const double> vector(WordId id) const {
    return input.row(static_cast<std::size_t>(id));
  }
};

struct TrainConfig {
  std::size_t dim = 100;
  int window = 5;
  int negatives = 5;
  double initial_lr = 0.025;
  double final_lr = 1e-4;
  int epochs = 5;
  double subsample_threshold = 1e-3;
  std::uint64_t seed = 1;
  int threads = 1;

  /// Throws Error("embedding", ...) when a field is out of range.
  void validate() const;
};

struct TrainStats {
  std::uint64_t tokens_processed = 0;
  std::uint64_t pairs = 0;
  double mean_loss = 0.0;
  int wall_epochs = 0;
};

/// Extra knobs for `train` beyond the hyperparameters.
struct TrainOptions {
  /// When non-empty (size |V|), rows flagged non-zero keep their input
  /// vector fixed; their output rows still train.
  std::span<const std::uint8_t> frozen_input_rows;
};

/// Input rows uniform in [-0.5/d, 0.5/d], output rows zero, stage general.
EmbeddingModel init_model(const corpus::Vocab& vocab, const TrainConfig& cfg, Rng& rng);

/// Negative-sampling loss of one (center, context) pair, evaluated without
/// touching the model.
double pair_loss(const EmbeddingModel& model, WordId center, WordId context,
                 std::span<const WordId> negatives);

/// One SGD step on the pair loss
///   -log s(W[c].W'[o]) - sum_n log s(-W[c].W'[n]).
/// All scores and gradients are taken at the pre-update parameters, so
/// repeated negatives contribute a summed gradient. Returns the loss before
/// the update.
double step_pair(EmbeddingModel& model, WordId center, WordId context,
                 std::span<const WordId> negatives, double lr);

/// Runs `cfg.epochs` epochs of skip-gram training over `tokens`. With
/// threads == 1 the run is bit-reproducible for a given seed; with more
/// workers the matrices are updated without locks.
TrainStats train(EmbeddingModel& model, const corpus::TokenStream& tokens, const TrainConfig& cfg,
                 const TrainOptions& options = {});

/// New model over `new_vocab`: rows of words known to `pretrained` are
/// copied (both matrices), other rows get a fresh init, then `train` runs.
EmbeddingModel continue_training(const EmbeddingModel& pretrained, const corpus::Vocab& new_vocab,
                                 const corpus::TokenStream& tokens, const TrainConfig& cfg,
                                 TrainStats* stats = nullptr);

double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// Up to k most cosine-similar words to `word`, excluding itself, ties in
/// vocab order.
std::vector<std::pair<std::string, double>> nearest_neighbors(const EmbeddingModel& model,
                                                              std::string_view word, std::size_t k);

/// Text vector format; the output matrix goes to `<path>.out` when
/// `with_output` is set.
void save_vectors(const EmbeddingModel& model, const std::string& path, bool with_output = true);

/// Loads `<path>` and, if present, the `<path>.out` sidecar (otherwise the
/// output matrix is zero). The vocab carries the file's word order and zero
/// counts; use corpus::recount before training.
EmbeddingModel load_vectors(const std::string& path);

std::string sidecar_path(const std::string& path);

}  // namespace sentivec::embedding
