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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles/polarity_ref.hpp"
#include "sentivec/error.hpp"
#include "sentivec/sentiment.hpp"
#include "support/synthetic.hpp"

using namespace sentivec;
using namespace sentivec::sentiment;
using embedding::EmbeddingModel;

namespace {

EmbeddingModel model_with(const std::vector<std::string>& words, std::size_t dim,
                          std::uint64_t seed = 1) {
  embedding::TrainConfig cfg;
  cfg.dim = dim;
  Rng rng(seed);
  return embedding::init_model(corpus::Vocab(words, std::vector<std::uint64_t>(words.size(), 1), 1),
                               cfg, rng);
}

void set_row(EmbeddingModel& m, const std::string& w, std::vector<double> v) {
  std::ranges::copy(v, m.input.row(static_cast<std::size_t>(*m.vocab.find(w))).begin());
}

SentimentLexicon lex_of(std::initializer_list<std::pair<const char*, Polarity>> items) {
  SentimentLexicon l;
  for (const auto& [w, p] : items) l.entries[w] = p;
  return l;
}

constexpr auto kPos = Polarity::positive;
constexpr auto kNeg = Polarity::negative;

// Trains a general model on the planted corpus, seeds it and runs one
// deterministic retraining epoch.
EmbeddingModel planted_pipeline(std::uint64_t seed, const corpus::TokenStream& ts) {
  embedding::TrainConfig cfg;
  cfg.dim = 50;
  cfg.initial_lr = 0.05;
  cfg.subsample_threshold = 0.0;
  cfg.seed = seed;
  const auto vocab = corpus::build_vocab(ts, 1, {});
  Rng rng = make_rng(seed);
  auto m = embedding::init_model(vocab, cfg, rng);
  embedding::train(m, ts, cfg);
  inject_seeds(m, synth::seed_lexicon(), {});
  seeded_retrain(m, ts, cfg, {});
  return m;
}

oracle::RefModel ref_of(const EmbeddingModel& m) {
  oracle::RefModel r;
  for (std::size_t i = 0; i < m.vocab.size(); ++i) {
    const auto row = m.input.row(i);
    r.rows[m.vocab.words()[i]] = std::vector<double>(row.begin(), row.end());
  }
  return r;
}

}  // namespace

TEST_CASE("parse_lexicon") {
  const auto l = parse_lexicon("good\t+\nbad\t-", "t");
  CHECK(l.size() == 2);
  CHECK(l.entries.at("good") == kPos);
  CHECK(l.entries.at("bad") == kNeg);

  const auto c = parse_lexicon("x\t+\nx\t-", "t");
  CHECK(c.empty());
  CHECK(c.dropped_conflicts == 1);

  // a third listing of a conflicted word stays dropped; duplicates collapse
  const auto c2 = parse_lexicon("x\t+\nx\t-\nx\t+\ny\t+\ny\t+\n", "t");
  CHECK(c2.size() == 1);
  CHECK(c2.dropped_conflicts == 1);

  try {
    parse_lexicon("x\t?", "t");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.module() == "sentiment");
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_lexicon("", "t"), Error);
  CHECK_THROWS_AS(parse_lexicon("word only\n", "t"), Error);
  CHECK(parse_lexicon("fine\tpositive\n", "t", LexiconFormat::words).entries.at("fine") == kPos);
  CHECK_THROWS_AS(load_lexicon("/no/such/lexicon.tsv"), Error);
}

TEST_CASE("merge_lexicons keeps agreements and singletons, drops conflicts") {
  CHECK(merge_lexicons(lex_of({{"x", kPos}}), lex_of({{"x", kPos}})).entries ==
        lex_of({{"x", kPos}}).entries);
  CHECK(merge_lexicons(lex_of({{"x", kPos}}), lex_of({{"x", kNeg}})).empty());
  CHECK(merge_lexicons(lex_of({{"x", kPos}}), lex_of({{"y", kNeg}})).entries ==
        lex_of({{"x", kPos}, {"y", kNeg}}).entries);
}

TEST_CASE("merge_lexicons is commutative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    SentimentLexicon a, b;
    for (int i = 0; i < 30; ++i) {
      const auto w = "w" + std::to_string(rng() % 40);
      (rng() % 2 ? a : b).entries[w] = rng() % 2 ? kPos : kNeg;
    }
    CHECK(merge_lexicons(a, b).entries == merge_lexicons(b, a).entries);
  }
}

TEST_CASE("inject_seeds writes +-m rows and leaves the rest alone") {
  auto m = model_with({"up", "down", "other"}, 3);
  const auto out_before = m.output;
  const auto other_before = std::vector<double>(m.input.row(2).begin(), m.input.row(2).end());
  const auto counts = inject_seeds(m, lex_of({{"up", kPos}, {"down", kNeg}, {"gone", kPos}}), {});
  CHECK(counts.positives == 1);
  CHECK(counts.negatives == 1);
  CHECK(counts.skipped_oov == 1);
  CHECK(std::ranges::equal(m.input.row(0), std::vector<double>{1, 1, 1}));
  CHECK(std::ranges::equal(m.input.row(1), std::vector<double>{-1, -1, -1}));
  CHECK(std::ranges::equal(m.input.row(2), other_before));
  CHECK(m.output == out_before);
  CHECK(m.stage == embedding::Stage::seeded);

  auto m2 = model_with({"n"}, 2);
  inject_seeds(m2, lex_of({{"n", kNeg}}), {});
  CHECK(std::ranges::equal(m2.input.row(0), std::vector<double>{-1, -1}));

  SeedConfig scaled;
  scaled.scale_by_dim = true;
  scaled.magnitude = 2.0;
  auto m3 = model_with({"a"}, 4);
  inject_seeds(m3, lex_of({{"a", kPos}}), scaled);
  CHECK(m3.input.row(0)[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(inject_seeds(m3, SentimentLexicon{}, {}), Error);
  SeedConfig bad;
  bad.magnitude = 0.0;
  CHECK_THROWS_AS(inject_seeds(m3, lex_of({{"a", kPos}}), bad), Error);
}

TEST_CASE("inject_seeds is idempotent") {
  auto once = model_with({"a", "b", "c"}, 5);
  const auto lex = lex_of({{"a", kPos}, {"c", kNeg}});
  inject_seeds(once, lex, {});
  auto twice = once;
  inject_seeds(twice, lex, {});
  CHECK(once.input == twice.input);
  CHECK(once.output == twice.output);
}

TEST_CASE("freshly injected seeds score as their own polarity") {
  auto m = model_with({"a", "b", "c", "d", "e"}, 6);
  const auto lex = lex_of({{"a", kPos}, {"b", kPos}, {"c", kNeg}, {"d", kNeg}});
  inject_seeds(m, lex, {});
  for (auto metric : {Metric::cosine, Metric::euclidean}) {
    const auto s = centroids(m, lex, metric);
    CHECK(std::ranges::all_of(s.pos_centroid, [](double x) { return x == 1.0; }));
    for (const auto& [w, p] : lex.entries) CHECK(polarity(s, m, w) == to_label(p));
  }
}

TEST_CASE("centroids average in-vocab seeds and need both sides") {
  auto m = model_with({"p1", "p2", "n1"}, 2);
  set_row(m, "p1", {1, 0});
  set_row(m, "p2", {0, 1});
  set_row(m, "n1", {-1, -1});
  const auto lex = lex_of({{"p1", kPos}, {"p2", kPos}, {"n1", kNeg}, {"absent", kNeg}});
  const auto s = centroids(m, lex);
  CHECK(s.pos_centroid == std::vector<double>{0.5, 0.5});
  CHECK(s.neg_centroid == std::vector<double>{-1, -1});
  CHECK(s.pos_seeds == 2);
  CHECK(s.neg_seeds == 1);
  CHECK_THROWS_AS(centroids(m, lex_of({{"p1", kPos}, {"absent", kNeg}})), Error);
}

TEST_CASE("centroids do not depend on seed order") {
  auto m = model_with({"a", "b", "c", "d", "e", "f"}, 7, 3);
  std::vector<std::pair<std::string, Polarity>> items = {{"a", kPos}, {"b", kPos}, {"c", kPos},
                                                         {"d", kNeg}, {"e", kNeg}, {"f", kNeg}};
  SentimentLexicon first;
  for (const auto& [w, p] : items) first.entries.emplace(w, p);
  const auto ref = centroids(m, first);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(items.begin(), items.end(), rng);
    SentimentLexicon l;
    for (const auto& [w, p] : items) l.entries.emplace(w, p);
    const auto s = centroids(m, l);
    CHECK(s.pos_centroid == ref.pos_centroid);
    CHECK(s.neg_centroid == ref.neg_centroid);
  }
}

TEST_CASE("polarity labels: nearest centroid, tie, unknown") {
  auto m = model_with({"p", "n", "w", "mid"}, 2);
  set_row(m, "p", {1, 1});
  set_row(m, "n", {-1, -1});
  set_row(m, "w", {1, 1});
  set_row(m, "mid", {0, 0});
  const auto lex = lex_of({{"p", kPos}, {"n", kNeg}});
  const auto e = centroids(m, lex, Metric::euclidean);
  CHECK(polarity(e, m, "w") == Label::positive);
  CHECK(polarity(e, m, "mid") == Label::tie);
  CHECK(polarity(e, m, "nowhere") == Label::unknown);
  const auto sc = score(e, m, "w");
  CHECK(sc.d_pos == 0.0);
  CHECK(sc.margin() > 0.0);

  PolarityScorer wrong = e;
  wrong.pos_centroid.push_back(0);
  CHECK_THROWS_AS(score(wrong, m, "w"), Error);
}

TEST_CASE("cosine polarity is invariant to positive rescaling of the word vector") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  auto m = model_with({"p", "n", "w"}, 5);
  for (int trial = 0; trial < 50; ++trial) {
    for (auto& x : m.input.data()) x = u(rng);
    const auto s = centroids(m, lex_of({{"p", kPos}, {"n", kNeg}}));
    const auto before = polarity(s, m, "w");
    const double k = std::exp(u(rng) * 5);
    for (auto& x : m.input.row(2)) x *= k;
    CHECK(polarity(s, m, "w") == before);
  }
}

TEST_CASE("precision") {
  std::map<std::string, Polarity> gold;
  std::map<std::string, Label> pred;
  for (int i = 0; i < 20; ++i) {
    const auto w = "g" + std::to_string(i);
    gold[w] = i % 2 ? kPos : kNeg;
    pred[w] = i < 13 ? to_label(gold[w]) : (i % 2 ? Label::negative : Label::positive);
  }
  CHECK(precision(pred, gold) == 0.65);
  for (auto& [w, l] : pred) l = to_label(gold[w]);
  CHECK(precision(pred, gold) == 1.0);
  for (auto& [w, l] : pred) l = Label::tie;
  CHECK(precision(pred, gold) == 0.0);
  pred.erase("g0");
  CHECK_THROWS_AS(precision(pred, gold), Error);
  CHECK_THROWS_AS(precision(pred, {}), Error);
}

TEST_CASE("seeded_retrain contracts") {
  const auto ts = synth::planted_corpus(1, "xw", "yw");
  embedding::TrainConfig cfg;
  cfg.dim = 10;
  cfg.subsample_threshold = 0;
  Rng rng(1);
  auto m = embedding::init_model(corpus::build_vocab(ts, 1, {}), cfg, rng);
  CHECK_THROWS_AS(seeded_retrain(m, ts, cfg, {}), Error);  // not seeded yet

  inject_seeds(m, synth::seed_lexicon(), {});
  const auto before = m;
  SeedConfig none;
  none.retrain_epochs = 0;
  seeded_retrain(m, ts, cfg, none);
  CHECK(m.input == before.input);
  CHECK(m.output == before.output);

  SeedConfig frozen;
  frozen.freeze_seeds = true;
  CHECK_THROWS_AS(seeded_retrain(m, ts, cfg, frozen), Error);  // needs the lexicon
  const auto lex = synth::seed_lexicon();
  seeded_retrain(m, ts, cfg, frozen, &lex);
  const auto good = static_cast<std::size_t>(*m.vocab.find("good"));
  CHECK(std::ranges::all_of(m.input.row(good), [](double x) { return x == 1.0; }));
  CHECK(m.output != before.output);
  const auto day = static_cast<std::size_t>(*m.vocab.find("day"));
  CHECK(!std::ranges::equal(m.input.row(day), before.input.row(day)));
}

TEST_CASE("one retraining epoch carries seed polarity to planted words") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto ts = synth::planted_corpus(100 + seed, "xw", "yw");
    const auto m = planted_pipeline(seed, ts);
    const auto scorer = centroids(m, synth::seed_lexicon());
    CHECK(polarity(scorer, m, "xw") == Label::positive);
    CHECK(polarity(scorer, m, "yw") == Label::negative);
    // independent labeler agrees
    const auto ref = ref_of(m);
    CHECK(oracle::label_ref(ref, synth::positive_seeds(), synth::negative_seeds(), "xw") ==
          oracle::RefLabel::positive);
    CHECK(oracle::label_ref(ref, synth::positive_seeds(), synth::negative_seeds(), "yw") ==
          oracle::RefLabel::negative);
  }
}

TEST_CASE("a word planted only near positive seeds ends up positive") {
  const auto ts = synth::planted_corpus(77, "xw", "");
  const auto m = planted_pipeline(4, ts);
  const auto scorer = centroids(m, synth::seed_lexicon());
  CHECK(polarity(scorer, m, "xw") == Label::positive);
  CHECK(oracle::label_ref(ref_of(m), synth::positive_seeds(), synth::negative_seeds(), "xw") ==
        oracle::RefLabel::positive);
}
