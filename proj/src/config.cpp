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

#include "sentivec/config.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "sentivec/error.hpp"
#include "sentivec/io.hpp"

namespace sentivec {
namespace {

const std::string kModule = "cli";

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
  throw Error(kModule, "config key '" + std::string(key) + "': value '" + std::string(value) +
                           "' is not " + expected);
}

double as_double(std::string_view key, std::string_view v) {
  const auto d = io::parse_double(v);
  if (!d || !std::isfinite(*d)) bad_value(key, v, "a number");
  return *d;
}

std::int64_t as_int(std::string_view key, std::string_view v) {
  const auto i = io::parse_int(v);
  if (!i) bad_value(key, v, "an integer");
  return *i;
}

std::uint64_t as_uint(std::string_view key, std::string_view v) {
  const auto i = as_int(key, v);
  if (i < 0) bad_value(key, v, "a non-negative integer");
  return static_cast<std::uint64_t>(i);
}

bool as_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, v, "a boolean");
}

using Setter = std::function<void(PipelineConfig&, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"dim", [](auto& c, auto k, auto v) { c.train.dim = as_uint(k, v); }},
      {"window", [](auto& c, auto k, auto v) { c.train.window = static_cast<int>(as_int(k, v)); }},
      {"negatives",
       [](auto& c, auto k, auto v) { c.train.negatives = static_cast<int>(as_int(k, v)); }},
      {"initial_lr", [](auto& c, auto k, auto v) { c.train.initial_lr = as_double(k, v); }},
      {"final_lr", [](auto& c, auto k, auto v) { c.train.final_lr = as_double(k, v); }},
      {"epochs", [](auto& c, auto k, auto v) { c.train.epochs = static_cast<int>(as_int(k, v)); }},
      {"subsample", [](auto& c, auto k, auto v) { c.train.subsample_threshold = as_double(k, v); }},
      {"seed", [](auto& c, auto k, auto v) { c.train.seed = as_uint(k, v); }},
      {"threads",
       [](auto& c, auto k, auto v) { c.train.threads = static_cast<int>(as_int(k, v)); }},
      {"min_count", [](auto& c, auto k, auto v) { c.min_count = as_uint(k, v); }},
      {"seed_magnitude", [](auto& c, auto k, auto v) { c.seeding.magnitude = as_double(k, v); }},
      {"seed_scale_by_dim",
       [](auto& c, auto k, auto v) { c.seeding.scale_by_dim = as_bool(k, v); }},
      {"retrain_epochs",
       [](auto& c, auto k, auto v) { c.seeding.retrain_epochs = static_cast<int>(as_int(k, v)); }},
      {"freeze_seeds", [](auto& c, auto k, auto v) { c.seeding.freeze_seeds = as_bool(k, v); }},
      {"metric",
       [](auto& c, auto k, auto v) {
         const auto m = sentiment::parse_metric(v);
         if (!m) bad_value(k, v, "cosine or euclidean");
         c.metric = *m;
       }},
      {"min_margin", [](auto& c, auto k, auto v) { c.min_margin = as_double(k, v); }},
      {"svm_c", [](auto& c, auto k, auto v) { c.svm.C = as_double(k, v); }},
      {"svm_gamma", [](auto& c, auto k, auto v) { c.svm.gamma = as_double(k, v); }},
      {"svm_tol", [](auto& c, auto k, auto v) { c.svm.tol = as_double(k, v); }},
      {"split_fraction", [](auto& c, auto k, auto v) { c.split_fraction = as_double(k, v); }},
      {"weighting",
       [](auto& c, auto k, auto v) {
         if (v == "uniform") {
           c.weighting = classify::Weighting::uniform;
         } else if (v == "frequency") {
           c.weighting = classify::Weighting::frequency;
         } else {
           bad_value(k, v, "uniform or frequency");
         }
       }},
      {"report_format",
       [](auto& c, auto k, auto v) {
         if (v == "tsv") {
           c.report_format = diffing::ReportFormat::tsv;
         } else if (v == "jsonl") {
           c.report_format = diffing::ReportFormat::jsonl;
         } else {
           bad_value(k, v, "tsv or jsonl");
         }
       }},
      {"corpus", [](auto& c, auto, auto v) { c.corpus = std::string(v); }},
      {"stopwords", [](auto& c, auto, auto v) { c.stopwords = std::string(v); }},
      {"vocab", [](auto& c, auto, auto v) { c.vocab = std::string(v); }},
      {"lexicon",
       [](auto& c, auto, auto v) {
         c.lexicons.clear();
         for (const auto part : io::split_nonempty(v, ',')) c.lexicons.push_back(trim(part));
       }},
      {"typical", [](auto& c, auto, auto v) { c.typical = std::string(v); }},
      {"wordlist", [](auto& c, auto, auto v) { c.wordlist = std::string(v); }},
      {"pretrained", [](auto& c, auto, auto v) { c.pretrained = std::string(v); }},
      {"labeled_docs", [](auto& c, auto, auto v) { c.labeled_docs = std::string(v); }},
  };
  return table;
}

}  // namespace

void PipelineConfig::set(std::string_view key, std::string_view value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw Error(kModule, "unknown config key '" + std::string(key) + "'");
  it->second(*this, key, value);
}

void PipelineConfig::apply_text(std::string_view text, const std::string& origin) {
  std::size_t lineno = 0;
  for (const auto raw : io::lines(text)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(kModule, origin + ": line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      set(trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)));
    } catch (const Error& e) {
      throw Error(kModule, origin + ": line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void PipelineConfig::apply_file(const std::string& path) {
  apply_text(io::read_file(path, kModule), path);
}

const std::vector<std::string>& PipelineConfig::keys() {
  static const std::vector<std::string> k = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : setters()) out.push_back(name);
    return out;
  }();
  return k;
}

}  // namespace sentivec
