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

// Command-line front end for the sentivec pipeline.

#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sentivec/error.hpp"

namespace {

using sentivec::cli::Args;
using sentivec::cli::Context;

// Flag values destined for PipelineConfig keys, applied after the config
// file and `--set` pairs so that flags take precedence.
using Overrides = std::vector<std::pair<std::string, std::string>>;

void key_option(CLI::App* app, const std::string& flags, const std::string& key, Overrides& ov,
                const std::string& help) {
  app->add_option_function<std::string>(
      flags, [&ov, key](const std::string& v) { ov.emplace_back(key, v); }, help);
}

void lexicon_option(CLI::App* app, Overrides& ov) {
  app->add_option_function<std::vector<std::string>>(
      "--lexicon",
      [&ov](const std::vector<std::string>& paths) {
        std::string joined;
        for (const auto& p : paths) joined += (joined.empty() ? "" : ",") + p;
        ov.emplace_back("lexicon", joined);
      },
      "Sentiment lexicon TSV (word, +/-); repeat to merge several");
}

int report(const std::string& module, const std::string& message) {
  std::string line = message;
  for (auto& c : line)
    if (c == '\n') c = ' ';
  std::cerr << "error: module=" << module << ' ' << line << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentiment-aware word embeddings: training, seeding, polarity and flips"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> sets;
  bool quiet = false;
  Overrides ov;
  Args args;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--set", sets, "Override one config key, as key=value");
  key_option(&app, "--seed", "seed", ov, "Seed for every random stream");
  key_option(&app, "--threads", "threads", ov, "Training threads; 1 is deterministic");
  app.add_flag("--quiet", quiet, "Suppress progress lines on stderr");

  auto* vocab = app.add_subcommand("vocab", "Count words of a corpus into a vocabulary file");
  key_option(vocab, "--corpus", "corpus", ov, "Corpus, one document per line");
  key_option(vocab, "--stopwords", "stopwords", ov, "Stop-word list");
  key_option(vocab, "--min-count", "min_count", ov, "Drop words rarer than this");
  vocab->add_option("-o,--out", args.out, "Vocabulary file to write");

  auto* train =
      app.add_subcommand("train", "Train skip-gram vectors, optionally from pretrained ones");
  key_option(train, "--corpus", "corpus", ov, "Corpus, one document per line");
  key_option(train, "--vocab", "vocab", ov, "Vocabulary file (built from the corpus if absent)");
  key_option(train, "--stopwords", "stopwords", ov,
             "Stop-word list used when building the vocabulary");
  key_option(train, "--pretrained", "pretrained", ov, "Vectors to continue training from");
  key_option(train, "--dim", "dim", ov, "Vector dimension");
  key_option(train, "--epochs", "epochs", ov, "Training epochs");
  train->add_option("-o,--out", args.out, "Vectors file to write");

  auto* seed = app.add_subcommand("seed-retrain", "Overwrite seed vectors and retrain");
  seed->add_option("--vectors", args.vectors, "Input vectors file")->expected(1);
  key_option(seed, "--corpus", "corpus", ov, "Corpus used for retraining");
  lexicon_option(seed, ov);
  key_option(seed, "--retrain-epochs", "retrain_epochs", ov, "Epochs after seeding");
  seed->add_option("--export-lexicon", args.export_lexicon, "Write the merged lexicon here");
  seed->add_option("-o,--out", args.out, "Vectors file to write");

  auto* pol = app.add_subcommand("polarity", "Label words by their nearest polarity centroid");
  pol->add_option("--vectors", args.vectors, "Vectors file")->expected(1);
  lexicon_option(pol, ov);
  key_option(pol, "--typical", "typical", ov, "Seed subset for the centroids");
  key_option(pol, "--words", "wordlist", ov, "Words to label (whole vocabulary if absent)");
  key_option(pol, "--metric", "metric", ov, "cosine or euclidean");
  pol->add_option("--gold", args.gold, "Gold lexicon; prints precision on stdout");
  pol->add_option("-o,--out", args.out, "Polarity TSV to write");

  auto* diff = app.add_subcommand("diff", "Report words whose polarity differs across models");
  diff->add_option("--vectors", args.vectors, "Vectors files, two or more");
  diff->add_option("--names", args.names, "Comma-separated model names (file stems by default)");
  lexicon_option(diff, ov);
  key_option(diff, "--typical", "typical", ov, "Seed subset for the centroids");
  key_option(diff, "--words", "wordlist", ov, "Words to compare (union of vocabularies if absent)");
  key_option(diff, "--metric", "metric", ov, "cosine or euclidean");
  key_option(diff, "--min-margin", "min_margin", ov, "Treat smaller distance margins as ties");
  key_option(diff, "--format", "report_format", ov, "tsv or jsonl");
  diff->add_option("-o,--out", args.out, "Report file to write");

  auto* proj = app.add_subcommand("project", "Project word vectors onto two principal axes");
  proj->add_option("--vectors", args.vectors, "Vectors files");
  key_option(proj, "--words", "wordlist", ov, "Words to project");
  proj->add_option("-o,--out", args.out, "Projection TSV to write");

  auto* cls = app.add_subcommand("classify", "Train and evaluate an RBF SVM on document vectors");
  cls->add_option("--vectors", args.vectors, "Vectors file")->expected(1);
  key_option(cls, "--docs", "labeled_docs", ov, "Labeled documents TSV (+1/-1, tokens)");
  key_option(cls, "--split", "split_fraction", ov, "Training fraction");
  key_option(cls, "--C", "svm_c", ov, "Box constraint");
  key_option(cls, "--gamma", "svm_gamma", ov, "RBF width");
  key_option(cls, "--weighting", "weighting", ov, "uniform or frequency");
  cls->add_option("--model-out", args.model_out, "Write the trained SVM here");
  cls->add_option("-o,--out", args.out, "Metrics JSON to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("cli", e.what());
  }

  const std::vector<std::pair<CLI::App*, std::function<int(const Context&, const Args&)>>>
      commands = {
          {vocab, sentivec::cli::cmd_vocab},       {train, sentivec::cli::cmd_train},
          {seed, sentivec::cli::cmd_seed_retrain}, {pol, sentivec::cli::cmd_polarity},
          {diff, sentivec::cli::cmd_diff},         {proj, sentivec::cli::cmd_project},
          {cls, sentivec::cli::cmd_classify},
  };

  try {
    Context ctx;
    ctx.quiet = quiet;
    if (!config_path.empty()) ctx.cfg.apply_file(config_path);
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        throw sentivec::Error("cli", "--set expects key=value, got '" + s + "'");
      ctx.cfg.set(s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& [key, value] : ov) ctx.cfg.set(key, value);
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) return run(ctx, args);
    return report("cli", "no subcommand");
  } catch (const sentivec::Error& e) {
    return report(e.module(), e.what());
  } catch (const std::exception& e) {
    return report("internal", e.what());
  }
}
