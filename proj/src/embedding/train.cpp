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
#include <atomic>
#include <random>
#include <thread>

#include "sentivec/embedding.hpp"
#include "sentivec/error.hpp"
#include "sentivec/noise.hpp"
#include "sgd.hpp"

namespace sentivec::embedding {
namespace {

const std::string kModule = "embedding";

// Stream tags for make_rng.
constexpr std::uint64_t kScheduleStream = 0x7363686564;  // "sched"
constexpr std::uint64_t kNegativeStream = 0x6e6567;      // "neg"

/// The per-document training schedule: which tokens survive subsampling and
/// the window radius drawn for each. It depends only on (seed, epoch, doc),
/// so it can be replayed to count pairs before training.
struct DocSchedule {
  std::vector<WordId> tokens;
  std::vector<int> radius;
  std::uint64_t pairs = 0;
};

void build_schedule(const std::vector<WordId>& doc, const std::vector<double>& discard,
                    const TrainConfig& cfg, int epoch, std::size_t doc_index, DocSchedule& out) {
  out.tokens.clear();
  out.radius.clear();
  out.pairs = 0;
  Rng rng = make_rng(cfg.seed, {kScheduleStream, static_cast<std::uint64_t>(epoch),
                                static_cast<std::uint64_t>(doc_index)});
  for (const WordId id : doc) {
    const double p = discard[static_cast<std::size_t>(id)];
    if (p > 0.0 && uniform01(rng) < p) continue;
    out.tokens.push_back(id);
  }
  std::uniform_int_distribution<int> radius(1, cfg.window);
  const auto n = static_cast<std::int64_t>(out.tokens.size());
  for (std::int64_t t = 0; t < n; ++t) {
    const int b = radius(rng);
    out.radius.push_back(b);
    const std::int64_t lo = std::max<std::int64_t>(0, t - b);
    const std::int64_t hi = std::min<std::int64_t>(n - 1, t + b);
    out.pairs += static_cast<std::uint64_t>(hi - lo);
  }
}

struct WorkerResult {
  std::uint64_t tokens = 0;
  std::uint64_t pairs = 0;
  double loss = 0.0;
};

}  // namespace

TrainStats train(EmbeddingModel& model, const corpus::TokenStream& tokens, const TrainConfig& cfg,
                 const TrainOptions& options) {
  cfg.validate();
  const std::size_t v = model.vocab.size();
  if (model.input.rows() != v || model.output.rows() != v || model.input.cols() != model.dim ||
      model.output.cols() != model.dim) {
    throw Error(kModule, "vocab/model mismatch: matrices do not have |V| rows and d columns");
  }
  if (model.dim != cfg.dim) {
    throw Error(kModule, "vocab/model mismatch: model has d=" + std::to_string(model.dim) +
                             ", config has d=" + std::to_string(cfg.dim));
  }
  if (!options.frozen_input_rows.empty() && options.frozen_input_rows.size() != v) {
    throw Error(kModule, "frozen-row mask must have one entry per vocab word");
  }
  TrainStats stats;
  if (cfg.epochs == 0) return stats;
  if (model.vocab.total_tokens() == 0) {
    throw Error(kModule, "vocab/model mismatch: vocab carries no word counts");
  }
  const auto nonzero = std::count_if(model.vocab.counts().begin(), model.vocab.counts().end(),
                                     [](std::uint64_t c) { return c > 0; });
  if (nonzero < 2) {
    throw Error(kModule, "negative sampling needs at least two vocab words with nonzero count");
  }

  const auto docs = corpus::encode(tokens, model.vocab);
  const NoiseSampler noise(model.vocab.counts());
  std::vector<double> discard(v);
  for (std::size_t i = 0; i < v; ++i) {
    discard[i] = corpus::discard_probability(model.vocab.counts()[i], model.vocab.total_tokens(),
                                             cfg.subsample_threshold);
  }

  // Count pass: the learning rate decays over the exact number of pairs.
  std::uint64_t total_pairs = 0;
  {
    DocSchedule sched;
    for (int e = 0; e < cfg.epochs; ++e) {
      for (std::size_t d = 0; d < docs.size(); ++d) {
        build_schedule(docs[d], discard, cfg, e, d, sched);
        total_pairs += sched.pairs;
      }
    }
  }

  const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(docs.size())));
  std::atomic<std::uint64_t> pair_cursor{0};
  std::vector<WorkerResult> results(static_cast<std::size_t>(workers));
  const double lr_span = cfg.initial_lr - cfg.final_lr;
  const auto frozen = options.frozen_input_rows;

  auto run_worker = [&](int w, int epoch) {
    Rng neg_rng = make_rng(cfg.seed, {kNegativeStream, static_cast<std::uint64_t>(epoch),
                                      static_cast<std::uint64_t>(w)});
    detail::StepScratch scratch;
    DocSchedule sched;
    std::vector<WordId> negs(static_cast<std::size_t>(cfg.negatives));
    WorkerResult& res = results[static_cast<std::size_t>(w)];
    for (std::size_t d = static_cast<std::size_t>(w); d < docs.size();
         d += static_cast<std::size_t>(workers)) {
      build_schedule(docs[d], discard, cfg, epoch, d, sched);
      res.tokens += sched.tokens.size();
      std::uint64_t pair_index = pair_cursor.fetch_add(sched.pairs, std::memory_order_relaxed);
      const auto n = static_cast<std::int64_t>(sched.tokens.size());
      for (std::int64_t t = 0; t < n; ++t) {
        const WordId center = sched.tokens[static_cast<std::size_t>(t)];
        const int b = sched.radius[static_cast<std::size_t>(t)];
        const bool freeze = !frozen.empty() && frozen[static_cast<std::size_t>(center)] != 0;
        const std::int64_t lo = std::max<std::int64_t>(0, t - b);
        const std::int64_t hi = std::min<std::int64_t>(n - 1, t + b);
        for (std::int64_t c = lo; c <= hi; ++c) {
          if (c == t) continue;
          const WordId context = sched.tokens[static_cast<std::size_t>(c)];
          for (auto& neg : negs) {
            do {
              neg = noise.sample(neg_rng);
            } while (neg == context);
          }
          const double progress =
              static_cast<double>(pair_index) / static_cast<double>(total_pairs);
          const double lr = cfg.initial_lr - lr_span * std::min(progress, 1.0);
          res.loss += detail::sgd_step(model.input, model.output, center, context, negs, lr, freeze,
                                       scratch);
          ++res.pairs;
          ++pair_index;
        }
      }
    }
  };

  for (int e = 0; e < cfg.epochs; ++e) {
    if (workers == 1) {
      run_worker(0, e);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w, e);
    }
  }

  double loss = 0.0;
  for (const auto& r : results) {
    stats.tokens_processed += r.tokens;
    stats.pairs += r.pairs;
    loss += r.loss;
  }
  stats.mean_loss = stats.pairs ? loss / static_cast<double>(stats.pairs) : 0.0;
  stats.wall_epochs = cfg.epochs;
  model.trained_epochs += cfg.epochs;
  return stats;
}

}  // namespace sentivec::embedding
