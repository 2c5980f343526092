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

#include "sentivec/sentiment.hpp"

#include <cmath>
#include <ostream>
#include <set>

#include "sentivec/error.hpp"
#include "sentivec/io.hpp"
#include "sentivec/simd/kernels.hpp"

namespace sentivec::sentiment {
namespace {

const std::string kModule = "sentiment";

std::optional<Polarity> parse_polarity(std::string_view s, LexiconFormat format) {
  if (format == LexiconFormat::signs) {
    if (s == "+") return Polarity::positive;
    if (s == "-") return Polarity::negative;
  } else {
    if (s == "positive") return Polarity::positive;
    if (s == "negative") return Polarity::negative;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Polarity p) noexcept {
  return p == Polarity::positive ? "positive" : "negative";
}

std::string_view to_string(Label l) noexcept {
  switch (l) {
    case Label::positive:
      return "positive";
    case Label::negative:
      return "negative";
    case Label::tie:
      return "tie";
    case Label::unknown:
      break;
  }
  return "unknown";
}

std::optional<Label> parse_label(std::string_view s) noexcept {
  for (auto l : {Label::positive, Label::negative, Label::tie, Label::unknown}) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

std::string_view to_string(Metric m) noexcept {
  return m == Metric::cosine ? "cosine" : "euclidean";
}

std::optional<Metric> parse_metric(std::string_view s) noexcept {
  if (s == "cosine") return Metric::cosine;
  if (s == "euclidean") return Metric::euclidean;
  return std::nullopt;
}

SentimentLexicon parse_lexicon(std::string_view text, std::string source_tag,
                               LexiconFormat format) {
  if (const auto bad = io::find_invalid_utf8(text)) {
    throw Error(kModule, source_tag + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  SentimentLexicon lex;
  lex.source_tag = std::move(source_tag);
  std::set<std::string> conflicted;
  std::size_t lineno = 0;
  bool any = false;
  for (const auto line : io::lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    std::optional<Polarity> p;
    std::string_view word;
    if (tab != std::string_view::npos && line.find('\t', tab + 1) == std::string_view::npos) {
      word = line.substr(0, tab);
      p = parse_polarity(line.substr(tab + 1), format);
    }
    if (!p || word.empty() || word.find(' ') != std::string_view::npos) {
      throw Error(kModule, lex.source_tag + ": malformed lexicon line " + std::to_string(lineno) +
                               ": expected 'word<TAB>polarity'");
    }
    any = true;
    std::string w(word);
    if (conflicted.count(w)) continue;
    const auto [it, inserted] = lex.entries.emplace(w, *p);
    if (!inserted && it->second != *p) {
      lex.entries.erase(it);
      conflicted.insert(std::move(w));
    }
  }
  if (!any) throw Error(kModule, lex.source_tag + ": empty lexicon file");
  lex.dropped_conflicts = conflicted.size();
  return lex;
}

SentimentLexicon load_lexicon(const std::string& path, LexiconFormat format) {
  return parse_lexicon(io::read_file(path, kModule), path, format);
}

void save_lexicon(const SentimentLexicon& lex, const std::string& path) {
  io::write_atomic(
      path,
      [&](std::ostream& os) {
        for (const auto& [w, p] : lex.entries) {
          os << w << '\t' << (p == Polarity::positive ? '+' : '-') << '\n';
        }
      },
      kModule);
}

SentimentLexicon merge_lexicons(const SentimentLexicon& a, const SentimentLexicon& b) {
  SentimentLexicon out;
  out.source_tag = a.source_tag < b.source_tag ? a.source_tag + "+" + b.source_tag
                                               : b.source_tag + "+" + a.source_tag;
  out.entries = a.entries;
  for (const auto& [w, p] : b.entries) {
    const auto it = out.entries.find(w);
    if (it == out.entries.end()) {
      out.entries.emplace(w, p);
    } else if (it->second != p) {
      out.entries.erase(it);
    }
  }
  return out;
}

double SeedConfig::component(std::size_t dim) const {
  return scale_by_dim ? magnitude / std::sqrt(static_cast<double>(dim)) : magnitude;
}

SeedCounts inject_seeds(embedding::EmbeddingModel& model, const SentimentLexicon& lex,
                        const SeedConfig& cfg) {
  if (lex.empty()) throw Error(kModule, "cannot inject seeds from an empty lexicon");
  if (!(cfg.magnitude > 0.0) || !std::isfinite(cfg.magnitude)) {
    throw Error(kModule, "seed magnitude must be a positive finite number");
  }
  const double m = cfg.component(model.dim);
  SeedCounts counts;
  for (const auto& [w, p] : lex.entries) {
    const auto id = model.vocab.find(w);
    if (!id) {
      ++counts.skipped_oov;
      continue;
    }
    const double value = p == Polarity::positive ? m : -m;
    for (auto& x : model.input.row(static_cast<std::size_t>(*id))) x = value;
    ++(p == Polarity::positive ? counts.positives : counts.negatives);
  }
  model.stage = embedding::Stage::seeded;
  return counts;
}

embedding::TrainStats seeded_retrain(embedding::EmbeddingModel& model,
                                     const corpus::TokenStream& tokens,
                                     const embedding::TrainConfig& cfg, const SeedConfig& seed_cfg,
                                     const SentimentLexicon* seeds) {
  if (model.stage != embedding::Stage::seeded) {
    throw Error(kModule, "stage mismatch: seeded_retrain needs a seeded model, got stage '" +
                             std::string(embedding::stage_name(model.stage)) + "'");
  }
  if (seed_cfg.retrain_epochs < 0) throw Error(kModule, "retrain_epochs must be >= 0");
  embedding::TrainConfig retrain = cfg;
  retrain.epochs = seed_cfg.retrain_epochs;
  if (retrain.epochs == 0) return {};

  std::vector<std::uint8_t> frozen;
  embedding::TrainOptions options;
  if (seed_cfg.freeze_seeds) {
    if (!seeds) throw Error(kModule, "freeze_seeds requires the seed lexicon");
    frozen.assign(model.vocab.size(), 0);
    for (const auto& [w, p] : seeds->entries) {
      if (const auto id = model.vocab.find(w)) frozen[static_cast<std::size_t>(*id)] = 1;
    }
    options.frozen_input_rows = frozen;
  }
  return embedding::train(model, tokens, retrain, options);
}

double distance(Metric m, std::span<const double> a, std::span<const double> b) {
  if (m == Metric::euclidean) return std::sqrt(simd::squared_distance(a, b));
  return 1.0 - embedding::cosine_similarity(a, b);
}

PolarityScorer centroids(const embedding::EmbeddingModel& model, const SentimentLexicon& lex,
                         Metric metric) {
  PolarityScorer s;
  s.metric = metric;
  s.pos_centroid.assign(model.dim, 0.0);
  s.neg_centroid.assign(model.dim, 0.0);
  for (const auto& [w, p] : lex.entries) {
    const auto id = model.vocab.find(w);
    if (!id) continue;
    if (p == Polarity::positive) {
      simd::axpy(1.0, model.vector(*id), s.pos_centroid);
      ++s.pos_seeds;
    } else {
      simd::axpy(1.0, model.vector(*id), s.neg_centroid);
      ++s.neg_seeds;
    }
  }
  if (s.pos_seeds == 0 || s.neg_seeds == 0) {
    throw Error(kModule, "centroids need at least one in-vocab positive and negative seed (found " +
                             std::to_string(s.pos_seeds) + " positive, " +
                             std::to_string(s.neg_seeds) + " negative)");
  }
  simd::scale(1.0 / static_cast<double>(s.pos_seeds), s.pos_centroid);
  simd::scale(1.0 / static_cast<double>(s.neg_seeds), s.neg_centroid);
  return s;
}

double PolarityScore::margin() const noexcept {
  return label == Label::unknown ? 0.0 : std::abs(d_pos - d_neg);
}

PolarityScore score(const PolarityScorer& scorer, const embedding::EmbeddingModel& model,
                    std::string_view word) {
  if (scorer.pos_centroid.size() != model.dim || scorer.neg_centroid.size() != model.dim) {
    throw Error(kModule,
                "dimension mismatch: scorer has d=" + std::to_string(scorer.pos_centroid.size()) +
                    ", model has d=" + std::to_string(model.dim));
  }
  PolarityScore out;
  const auto id = model.vocab.find(word);
  if (!id) return out;
  const auto v = model.vector(*id);
  out.d_pos = distance(scorer.metric, v, scorer.pos_centroid);
  out.d_neg = distance(scorer.metric, v, scorer.neg_centroid);
  if (std::abs(out.d_pos - out.d_neg) <= kTieTolerance) {
    out.label = Label::tie;
  } else {
    out.label = out.d_pos < out.d_neg ? Label::positive : Label::negative;
  }
  return out;
}

Label polarity(const PolarityScorer& scorer, const embedding::EmbeddingModel& model,
               std::string_view word) {
  return score(scorer, model, word).label;
}

double precision(const std::map<std::string, Label>& predicted,
                 const std::map<std::string, Polarity>& gold) {
  if (gold.empty()) throw Error(kModule, "precision needs a non-empty gold set");
  std::size_t correct = 0;
  for (const auto& [w, p] : gold) {
    const auto it = predicted.find(w);
    if (it == predicted.end()) throw Error(kModule, "no prediction for gold word '" + w + "'");
    if (it->second == to_label(p)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

void write_polarity_report(const std::string& path,
                           const std::vector<std::pair<std::string, PolarityScore>>& rows) {
  io::write_atomic(
      path,
      [&](std::ostream& os) {
        os << "word\tlabel\td_pos\td_neg\n";
        for (const auto& [w, s] : rows) {
          os << w << '\t' << to_string(s.label) << '\t';
          if (s.label == Label::unknown) {
            os << "NA\tNA\n";
          } else {
            os << io::format_shortest(s.d_pos) << '\t' << io::format_shortest(s.d_neg) << '\n';
          }
        }
      },
      kModule);
}

}  // namespace sentivec::sentiment
