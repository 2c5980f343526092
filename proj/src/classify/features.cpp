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
#include <map>

#include "sentivec/classify.hpp"
#include "sentivec/error.hpp"
#include "sentivec/io.hpp"
#include "sentivec/simd/kernels.hpp"

namespace sentivec::classify {
namespace {

const std::string kModule = "classify";

}  // namespace

DocFeature doc_vector(const embedding::EmbeddingModel& model, std::span<const std::string> tokens,
                      Weighting weighting) {
  if (weighting == Weighting::frequency) {
    return doc_vector(model, tokens,
                      [](corpus::WordId, std::size_t n) { return static_cast<double>(n); });
  }
  if (tokens.empty()) throw Error(kModule, "doc_vector needs a non-empty token list");
  DocFeature f;
  f.vector.assign(model.dim, 0.0);
  std::size_t in_vocab = 0;
  for (const auto& t : tokens) {
    if (const auto id = model.vocab.find(t)) {
      simd::axpy(1.0, model.vector(*id), f.vector);
      ++in_vocab;
    }
  }
  if (in_vocab > 0) simd::scale(1.0 / static_cast<double>(in_vocab), f.vector);
  f.oov_fraction =
      static_cast<double>(tokens.size() - in_vocab) / static_cast<double>(tokens.size());
  return f;
}

DocFeature doc_vector(const embedding::EmbeddingModel& model, std::span<const std::string> tokens,
                      const WeightFn& weight) {
  if (tokens.empty()) throw Error(kModule, "doc_vector needs a non-empty token list");
  std::map<corpus::WordId, std::size_t> occurrences;
  std::size_t oov = 0;
  for (const auto& t : tokens) {
    if (const auto id = model.vocab.find(t)) {
      ++occurrences[*id];
    } else {
      ++oov;
    }
  }
  DocFeature f;
  f.vector.assign(model.dim, 0.0);
  double total = 0.0;
  for (const auto& [id, n] : occurrences) {
    const double w = weight(id, n);
    simd::axpy(w, model.vector(id), f.vector);
    total += w;
  }
  if (total != 0.0) simd::scale(1.0 / total, f.vector);
  f.oov_fraction = static_cast<double>(oov) / static_cast<double>(tokens.size());
  return f;
}

double rbf(std::span<const double> x, std::span<const double> y, double gamma) {
  if (x.size() != y.size()) {
    throw Error(kModule, "rbf dimension mismatch: " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
  }
  return std::exp(-gamma * simd::squared_distance(x, y));
}

bool LabeledSet::has_both_classes() const noexcept {
  bool pos = false, neg = false;
  for (const auto& e : items) (e.label > 0 ? pos : neg) = true;
  return pos && neg;
}

std::pair<LabeledSet, LabeledSet> split(const LabeledSet& data, double train_fraction, Rng& rng) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(kModule, "train fraction must be in (0, 1)");
  }
  const std::size_t n = data.size();
  // nearbyint rounds half to even under the default rounding mode.
  const auto n_train =
      static_cast<std::size_t>(std::nearbyint(train_fraction * static_cast<double>(n)));
  if (n_train == 0 || n_train >= n) {
    throw Error(kModule, "split of " + std::to_string(n) + " items at fraction " +
                             io::format_shortest(train_fraction) + " leaves an empty side");
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  LabeledSet train, test;
  train.items.reserve(n_train);
  test.items.reserve(n - n_train);
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_train ? train : test).items.push_back(data.items[order[i]]);
  }
  if (!train.has_both_classes()) {
    throw Error(kModule, "training split contains a single class; use more data or another seed");
  }
  return {std::move(train), std::move(test)};
}

std::vector<std::pair<int, std::vector<std::string>>> load_labeled_docs(const std::string& path) {
  const std::string text = io::read_file(path, kModule);
  if (const auto bad = io::find_invalid_utf8(text)) {
    throw Error(kModule, path + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::size_t lineno = 0;
  for (const auto line : io::lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const auto where = path + ": line " + std::to_string(lineno);
    if (tab == std::string_view::npos)
      throw Error(kModule, where + ": expected 'label<TAB>tokens'");
    const auto label = line.substr(0, tab);
    int y = 0;
    if (label == "+1" || label == "1") {
      y = 1;
    } else if (label == "-1") {
      y = -1;
    } else {
      throw Error(kModule, where + ": label must be +1 or -1");
    }
    std::vector<std::string> toks;
    for (const auto t : io::split_nonempty(line.substr(tab + 1), ' ')) toks.emplace_back(t);
    if (toks.empty()) throw Error(kModule, where + ": document has no tokens");
    out.emplace_back(y, std::move(toks));
  }
  return out;
}

LabeledSet featurize(const embedding::EmbeddingModel& model,
                     const std::vector<std::pair<int, std::vector<std::string>>>& docs,
                     Weighting weighting) {
  LabeledSet set;
  set.items.reserve(docs.size());
  for (const auto& [y, toks] : docs) set.items.push_back({doc_vector(model, toks, weighting), y});
  return set;
}

}  // namespace sentivec::classify
