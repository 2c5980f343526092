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
#include <random>

#include "sentivec/embedding.hpp"
#include "sentivec/error.hpp"
#include "sentivec/simd/kernels.hpp"
#include "sgd.hpp"

namespace sentivec::embedding {
namespace {

const std::string kModule = "embedding";

void check_index(const EmbeddingModel& model, WordId id, const char* what) {
  if (id < 0 || static_cast<std::size_t>(id) >= model.input.rows()) {
    throw Error(kModule, std::string(what) + " index " + std::to_string(id) + " out of range [0, " +
                             std::to_string(model.input.rows()) + ")");
  }
}

void check_pair(const EmbeddingModel& model, WordId center, WordId context,
                std::span<const WordId> negatives) {
  check_index(model, center, "center");
  check_index(model, context, "context");
  if (negatives.empty()) throw Error(kModule, "step_pair needs at least one negative");
  for (auto n : negatives) check_index(model, n, "negative");
}

void fill_uniform(std::span<double> row, double half_width, Rng& rng) {
  std::uniform_real_distribution<double> dist(-half_width, half_width);
  for (auto& v : row) v = dist(rng);
}

}  // namespace

std::string_view stage_name(Stage s) noexcept {
  switch (s) {
    case Stage::domain:
      return "domain";
    case Stage::seeded:
      return "seeded";
    case Stage::general:
      break;
  }
  return "general";
}

void TrainConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(kModule, "invalid train config: " + m); };
  if (dim < 1) fail("dim must be >= 1");
  if (window < 1) fail("window must be >= 1");
  if (negatives < 1) fail("negatives must be >= 1");
  if (!(initial_lr > 0.0) || !std::isfinite(initial_lr)) fail("initial_lr must be > 0");
  if (!(final_lr >= 0.0) || final_lr > initial_lr) fail("final_lr must be in [0, initial_lr]");
  if (epochs < 0) fail("epochs must be >= 0");
  if (!(subsample_threshold >= 0.0)) fail("subsample threshold must be >= 0");
  if (threads < 1) fail("threads must be >= 1");
}

EmbeddingModel init_model(const corpus::Vocab& vocab, const TrainConfig& cfg, Rng& rng) {
  if (vocab.empty()) throw Error(kModule, "cannot initialize a model over an empty vocab");
  if (cfg.dim < 1) throw Error(kModule, "dim must be >= 1");
  EmbeddingModel m;
  m.vocab = vocab;
  m.dim = cfg.dim;
  m.input = Matrix(vocab.size(), cfg.dim);
  m.output = Matrix(vocab.size(), cfg.dim);
  fill_uniform(m.input.data(), 0.5 / static_cast<double>(cfg.dim), rng);
  m.stage = Stage::general;
  return m;
}

double pair_loss(const EmbeddingModel& model, WordId center, WordId context,
                 std::span<const WordId> negatives) {
  check_pair(model, center, context, negatives);
  const auto c = model.input.row(static_cast<std::size_t>(center));
  double loss =
      detail::softplus(-simd::dot(c, model.output.row(static_cast<std::size_t>(context))));
  for (auto n : negatives) {
    loss += detail::softplus(simd::dot(c, model.output.row(static_cast<std::size_t>(n))));
  }
  return loss;
}

double step_pair(EmbeddingModel& model, WordId center, WordId context,
                 std::span<const WordId> negatives, double lr) {
  check_pair(model, center, context, negatives);
  if (!(lr > 0.0)) throw Error(kModule, "learning rate must be > 0");
  detail::StepScratch scratch;
  return detail::sgd_step(model.input, model.output, center, context, negatives, lr, false,
                          scratch);
}

EmbeddingModel continue_training(const EmbeddingModel& pretrained, const corpus::Vocab& new_vocab,
                                 const corpus::TokenStream& tokens, const TrainConfig& cfg,
                                 TrainStats* stats) {
  if (pretrained.dim != cfg.dim) {
    throw Error(kModule,
                "dimension mismatch: pretrained model has d=" + std::to_string(pretrained.dim) +
                    ", config has d=" + std::to_string(cfg.dim));
  }
  if (new_vocab.empty()) throw Error(kModule, "cannot continue training over an empty vocab");
  cfg.validate();
  EmbeddingModel m;
  m.vocab = new_vocab;
  m.dim = cfg.dim;
  m.input = Matrix(new_vocab.size(), cfg.dim);
  m.output = Matrix(new_vocab.size(), cfg.dim);
  Rng rng = make_rng(cfg.seed, {0x696e6974 /* init */});
  const double half = 0.5 / static_cast<double>(cfg.dim);
  for (std::size_t i = 0; i < new_vocab.size(); ++i) {
    if (const auto old = pretrained.vocab.find(new_vocab.words()[i])) {
      const auto src = static_cast<std::size_t>(*old);
      std::ranges::copy(pretrained.input.row(src), m.input.row(i).begin());
      std::ranges::copy(pretrained.output.row(src), m.output.row(i).begin());
    } else {
      fill_uniform(m.input.row(i), half, rng);
    }
  }
  m.trained_epochs = pretrained.trained_epochs;
  const TrainStats s = train(m, tokens, cfg);
  if (stats) *stats = s;
  m.stage = Stage::domain;
  return m;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const double na = simd::dot(a, a);
  const double nb = simd::dot(b, b);
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return simd::dot(a, b) / std::sqrt(na * nb);
}

std::vector<std::pair<std::string, double>> nearest_neighbors(const EmbeddingModel& model,
                                                              std::string_view word,
                                                              std::size_t k) {
  const auto query = model.vocab.find(word);
  if (!query) throw Error(kModule, "word '" + std::string(word) + "' is not in the vocabulary");
  if (k < 1) throw Error(kModule, "k must be >= 1");
  const auto q = model.vector(*query);
  std::vector<std::pair<std::size_t, double>> scored;
  scored.reserve(model.vocab.size());
  for (std::size_t i = 0; i < model.vocab.size(); ++i) {
    if (static_cast<WordId>(i) == *query) continue;
    scored.emplace_back(i, cosine_similarity(q, model.input.row(i)));
  }
  const std::size_t keep = std::min(k, scored.size());
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::pair<std::string, double>> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    out.emplace_back(model.vocab.words()[scored[i].first], scored[i].second);
  }
  return out;
}

}  // namespace sentivec::embedding
