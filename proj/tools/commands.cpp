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

#include "commands.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "sentivec/classify.hpp"
#include "sentivec/corpus.hpp"
#include "sentivec/diffing.hpp"
#include "sentivec/embedding.hpp"
#include "sentivec/error.hpp"
#include "sentivec/io.hpp"
#include "sentivec/sentiment.hpp"

namespace sentivec::cli {

namespace {

const std::string kModule = "cli";

// Stream ids for the RNGs the commands draw from directly.
constexpr std::uint64_t kInitStream = 0x696e6974;
constexpr std::uint64_t kSplitStream = 0x73706c74;

void info(const Context& ctx, const std::string& line) {
  if (!ctx.quiet) std::cerr << line << '\n';
}

const std::string& need(const std::string& value, const std::string& what,
                        const std::string& command) {
  if (value.empty()) throw Error(kModule, command + " needs " + what);
  return value;
}

const std::string& need_out(const Args& args, const std::string& command) {
  return need(args.out, "an output path (--out)", command);
}

const std::string& need_one_vectors(const Args& args, const std::string& command) {
  if (args.vectors.size() != 1) throw Error(kModule, command + " takes exactly one --vectors file");
  return args.vectors.front();
}

sentiment::SentimentLexicon merged_lexicon(const PipelineConfig& cfg, const std::string& command) {
  if (cfg.lexicons.empty())
    throw Error(kModule, command + " needs at least one lexicon (--lexicon)");
  auto lex = sentiment::load_lexicon(cfg.lexicons.front());
  for (std::size_t i = 1; i < cfg.lexicons.size(); ++i)
    lex = sentiment::merge_lexicons(lex, sentiment::load_lexicon(cfg.lexicons[i]));
  return lex;
}

// Centroid seeds: the typical-word file when given, the merged lexicon otherwise.
sentiment::SentimentLexicon centroid_seeds(const PipelineConfig& cfg, const std::string& command) {
  if (!cfg.typical.empty()) return sentiment::load_lexicon(cfg.typical);
  return merged_lexicon(cfg, command);
}

std::vector<std::string> load_word_list(const std::string& path) {
  std::vector<std::string> words;
  for (auto& doc : corpus::load_corpus(path).docs)
    for (auto& w : doc) words.push_back(std::move(w));
  return words;
}

std::string summary(const embedding::TrainStats& s) {
  return "pairs=" + std::to_string(s.pairs) + " mean_loss=" + io::format_shortest(s.mean_loss);
}

}  // namespace

std::vector<std::string> default_names(const std::vector<std::string>& paths) {
  std::vector<std::string> names;
  std::set<std::string> taken;
  for (const auto& p : paths) {
    const std::string stem = std::filesystem::path(p).stem().string();
    std::string name = stem;
    for (int k = 2; taken.count(name); ++k) name = stem + "_" + std::to_string(k);
    taken.insert(name);
    names.push_back(name);
  }
  return names;
}

int cmd_vocab(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto tokens = corpus::load_corpus(need(cfg.corpus, "a corpus (--corpus)", "vocab"));
  const auto stops =
      cfg.stopwords.empty() ? corpus::StopWordSet{} : corpus::load_stopwords(cfg.stopwords);
  const auto vocab = corpus::build_vocab(tokens, cfg.min_count, stops);
  corpus::save_vocab(vocab, need_out(args, "vocab"));
  info(ctx, "vocab: " + std::to_string(vocab.size()) + " words from " +
                std::to_string(tokens.token_count()) + " tokens");
  return 0;
}

int cmd_train(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto& out = need_out(args, "train");
  const auto tokens = corpus::load_corpus(need(cfg.corpus, "a corpus (--corpus)", "train"));
  corpus::Vocab vocab;
  if (!cfg.vocab.empty()) {
    vocab = corpus::load_vocab(cfg.vocab);
  } else {
    const auto stops =
        cfg.stopwords.empty() ? corpus::StopWordSet{} : corpus::load_stopwords(cfg.stopwords);
    vocab = corpus::build_vocab(tokens, cfg.min_count, stops);
  }

  embedding::TrainStats stats;
  embedding::EmbeddingModel model;
  if (!cfg.pretrained.empty()) {
    model = embedding::continue_training(embedding::load_vectors(cfg.pretrained), vocab, tokens,
                                         cfg.train, &stats);
  } else {
    Rng rng = make_rng(cfg.train.seed, {kInitStream});
    model = embedding::init_model(vocab, cfg.train, rng);
    stats = embedding::train(model, tokens, cfg.train);
  }
  embedding::save_vectors(model, out);
  info(ctx, "train: " + std::to_string(model.vocab.size()) + " words, " + summary(stats));
  return 0;
}

int cmd_seed_retrain(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto& out = need_out(args, "seed-retrain");
  auto model = embedding::load_vectors(need_one_vectors(args, "seed-retrain"));
  const auto tokens = corpus::load_corpus(need(cfg.corpus, "a corpus (--corpus)", "seed-retrain"));
  const auto lex = merged_lexicon(cfg, "seed-retrain");
  // vector files carry no counts
  model.vocab = corpus::recount(model.vocab, tokens);

  const auto counts = sentiment::inject_seeds(model, lex, cfg.seeding);
  const auto stats = sentiment::seeded_retrain(model, tokens, cfg.train, cfg.seeding, &lex);
  embedding::save_vectors(model, out);
  if (!args.export_lexicon.empty()) sentiment::save_lexicon(lex, args.export_lexicon);
  info(ctx, "seed-retrain: seeds +" + std::to_string(counts.positives) + " -" +
                std::to_string(counts.negatives) + " (oov " + std::to_string(counts.skipped_oov) +
                "), " + summary(stats));
  return 0;
}

int cmd_polarity(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto& out = need_out(args, "polarity");
  const auto model = embedding::load_vectors(need_one_vectors(args, "polarity"));
  const auto scorer = sentiment::centroids(model, centroid_seeds(cfg, "polarity"), cfg.metric);
  const auto words = cfg.wordlist.empty() ? model.vocab.words() : load_word_list(cfg.wordlist);

  std::vector<std::pair<std::string, sentiment::PolarityScore>> rows;
  rows.reserve(words.size());
  for (const auto& w : words) rows.emplace_back(w, sentiment::score(scorer, model, w));
  sentiment::write_polarity_report(out, rows);

  if (!args.gold.empty()) {
    const auto gold = sentiment::load_lexicon(args.gold);
    std::map<std::string, sentiment::Label> predicted;
    for (const auto& [w, p] : gold.entries) predicted[w] = sentiment::polarity(scorer, model, w);
    std::cout << "precision\t" << io::format_shortest(sentiment::precision(predicted, gold.entries))
              << '\n';
  }
  info(ctx, "polarity: " + std::to_string(rows.size()) + " words");
  return 0;
}

int cmd_diff(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto& out = need_out(args, "diff");
  if (args.vectors.size() < 2) throw Error(kModule, "diff needs at least two --vectors files");
  const auto names = args.names.empty() ? default_names(args.vectors) : [&] {
    std::vector<std::string> v;
    for (auto n : io::split_nonempty(args.names, ',')) v.emplace_back(n);
    return v;
  }();
  if (names.size() != args.vectors.size())
    throw Error(kModule, "diff got " + std::to_string(names.size()) + " names for " +
                             std::to_string(args.vectors.size()) + " vector files");

  const auto seeds = centroid_seeds(cfg, "diff");
  std::vector<embedding::EmbeddingModel> models;
  std::vector<sentiment::PolarityScorer> scorers;
  models.reserve(args.vectors.size());
  scorers.reserve(args.vectors.size());
  for (const auto& path : args.vectors) {
    models.push_back(embedding::load_vectors(path));
    scorers.push_back(sentiment::centroids(models.back(), seeds, cfg.metric));
  }
  std::vector<diffing::ModelView> views;
  for (std::size_t i = 0; i < models.size(); ++i)
    views.push_back({names[i], &models[i], &scorers[i]});

  std::vector<std::string> words;
  if (!cfg.wordlist.empty()) {
    words = load_word_list(cfg.wordlist);
  } else {
    std::set<std::string> all;
    for (const auto& m : models) all.insert(m.vocab.words().begin(), m.vocab.words().end());
    words.assign(all.begin(), all.end());
  }

  diffing::CompareOptions opt;
  opt.min_margin = cfg.min_margin;
  const auto report = diffing::compare_models(views, words, opt);
  diffing::emit_report(report, out, cfg.report_format);
  info(ctx, "diff: " + std::to_string(report.rows.size()) + " words, " +
                std::to_string(report.count(diffing::Status::flip)) + " flips, " +
                std::to_string(report.count(diffing::Status::uncomparable)) + " uncomparable");
  return 0;
}

int cmd_project(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto& out = need_out(args, "project");
  if (args.vectors.empty()) throw Error(kModule, "project needs at least one --vectors file");
  const auto words = load_word_list(need(cfg.wordlist, "a word list (--words)", "project"));
  const auto names = default_names(args.vectors);
  std::vector<std::pair<std::string, diffing::Projection>> projections;
  for (std::size_t i = 0; i < args.vectors.size(); ++i) {
    const auto model = embedding::load_vectors(args.vectors[i]);
    projections.emplace_back(names[i], diffing::project_2d(model, words));
  }
  diffing::write_projections(out, projections);
  info(ctx, "project: " + std::to_string(projections.size()) + " models");
  return 0;
}

int cmd_classify(const Context& ctx, const Args& args) {
  const auto& cfg = ctx.cfg;
  const auto& out = need_out(args, "classify");
  const auto model = embedding::load_vectors(need_one_vectors(args, "classify"));
  const auto docs =
      classify::load_labeled_docs(need(cfg.labeled_docs, "labeled documents (--docs)", "classify"));
  const auto data = classify::featurize(model, docs, cfg.weighting);

  Rng rng = make_rng(cfg.train.seed, {kSplitStream});
  const auto [train, test] = classify::split(data, cfg.split_fraction, rng);
  const auto svm = classify::train_svm(train, cfg.svm);
  const double accuracy = classify::evaluate(svm, test);

  double oov = 0.0;
  for (const auto& e : data.items) oov += e.feature.oov_fraction;
  oov /= static_cast<double>(data.size());

  nlohmann::ordered_json j;
  j["documents"] = data.size();
  j["train_size"] = train.size();
  j["test_size"] = test.size();
  j["accuracy"] = accuracy;
  j["support_vectors"] = svm.support_vectors.size();
  j["svm_c"] = cfg.svm.C;
  j["svm_gamma"] = cfg.svm.gamma;
  j["seed"] = cfg.train.seed;
  j["weighting"] = cfg.weighting == classify::Weighting::uniform ? "uniform" : "frequency";
  j["mean_oov_fraction"] = oov;
  io::write_atomic(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; }, kModule);
  if (!args.model_out.empty()) classify::save_svm(svm, args.model_out);
  info(ctx, "classify: accuracy " + io::format_shortest(accuracy) + " on " +
                std::to_string(test.size()) + " held-out documents");
  return 0;
}

}  // namespace sentivec::cli
