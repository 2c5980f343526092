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

#include "sentivec/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "sentivec/error.hpp"
#include "sentivec/io.hpp"

namespace sentivec::corpus {
namespace {

const std::string kModule = "corpus";

bool is_separator(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_separator(line[j])) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::size_t TokenStream::token_count() const noexcept {
  std::size_t n = 0;
  for (const auto& d : docs) n += d.size();
  return n;
}

Vocab::Vocab(std::vector<std::string> words, std::vector<std::uint64_t> counts,
             std::uint64_t min_count)
    : words_(std::move(words)), counts_(std::move(counts)), min_count_(min_count) {
  if (words_.size() != counts_.size()) {
    throw Error(kModule, "vocab words/counts length mismatch");
  }
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].empty()) throw Error(kModule, "vocab contains an empty word");
    if (counts_[i] < min_count_) {
      throw Error(kModule, "vocab word '" + words_[i] + "' has count below min_count");
    }
    if (!index_.emplace(words_[i], static_cast<WordId>(i)).second) {
      throw Error(kModule, "duplicate vocab word '" + words_[i] + "'");
    }
    total_ += counts_[i];
  }
}

std::optional<WordId> Vocab::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenStream parse_corpus(std::string_view text) {
  if (const auto bad = io::find_invalid_utf8(text)) {
    throw Error(kModule, "invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  TokenStream ts;
  for (const auto line : io::lines(text)) {
    auto toks = split_tokens(line);
    if (!toks.empty()) ts.docs.push_back(std::move(toks));
  }
  return ts;
}

TokenStream load_corpus(const std::string& path) {
  const std::string text = io::read_file(path, kModule);
  try {
    return parse_corpus(text);
  } catch (const Error& e) {
    throw Error(kModule, path + ": " + e.what());
  }
}

StopWordSet parse_stopwords(std::string_view text) {
  if (const auto bad = io::find_invalid_utf8(text)) {
    throw Error(kModule, "invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  StopWordSet set;
  for (auto line : io::lines(text)) {
    while (!line.empty() && is_separator(line.front())) line.remove_prefix(1);
    while (!line.empty() && is_separator(line.back())) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    set.words.emplace(line);
  }
  return set;
}

StopWordSet load_stopwords(const std::string& path) {
  return parse_stopwords(io::read_file(path, kModule));
}

Vocab build_vocab(const TokenStream& tokens, std::uint64_t min_count, const StopWordSet& stops) {
  if (min_count < 1) throw Error(kModule, "min_count must be >= 1");
  std::unordered_map<std::string_view, std::uint64_t> freq;
  for (const auto& doc : tokens.docs) {
    for (const auto& t : doc) ++freq[t];
  }
  std::vector<std::pair<std::string_view, std::uint64_t>> kept;
  for (const auto& [w, c] : freq) {
    if (c >= min_count && !stops.words.count(std::string(w))) kept.emplace_back(w, c);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
  words.reserve(kept.size());
  counts.reserve(kept.size());
  for (const auto& [w, c] : kept) {
    words.emplace_back(w);
    counts.push_back(c);
  }
  return Vocab(std::move(words), std::move(counts), min_count);
}

Vocab recount(const Vocab& vocab, const TokenStream& tokens) {
  std::vector<std::uint64_t> counts(vocab.size(), 0);
  for (const auto& doc : tokens.docs) {
    for (const auto& t : doc) {
      if (const auto id = vocab.find(t)) ++counts[static_cast<std::size_t>(*id)];
    }
  }
  return Vocab(vocab.words(), std::move(counts), 0);
}

double discard_probability(std::uint64_t count, std::uint64_t total, double threshold) noexcept {
  if (threshold <= 0.0 || count == 0 || total == 0) return 0.0;
  const double f = static_cast<double>(count) / static_cast<double>(total);
  return std::clamp(1.0 - std::sqrt(threshold / f), 0.0, 1.0);
}

TokenStream subsample(const TokenStream& tokens, const Vocab& vocab, double threshold, Rng& rng) {
  if (threshold < 0.0) throw Error(kModule, "subsample threshold must be >= 0");
  TokenStream out;
  out.docs.reserve(tokens.docs.size());
  for (const auto& doc : tokens.docs) {
    std::vector<std::string> kept;
    for (const auto& t : doc) {
      const auto id = vocab.find(t);
      if (!id) continue;
      const double p = discard_probability(vocab.count(*id), vocab.total_tokens(), threshold);
      if (p > 0.0 && uniform01(rng) < p) continue;
      kept.push_back(t);
    }
    out.docs.push_back(std::move(kept));
  }
  return out;
}

std::vector<std::vector<WordId>> encode(const TokenStream& tokens, const Vocab& vocab) {
  std::vector<std::vector<WordId>> out;
  out.reserve(tokens.docs.size());
  for (const auto& doc : tokens.docs) {
    std::vector<WordId> ids;
    ids.reserve(doc.size());
    for (const auto& t : doc) {
      if (const auto id = vocab.find(t)) ids.push_back(*id);
    }
    out.push_back(std::move(ids));
  }
  return out;
}

void save_vocab(const Vocab& vocab, const std::string& path) {
  io::write_atomic(
      path,
      [&](std::ostream& os) {
        os << vocab.size() << ' ' << vocab.min_count() << '\n';
        for (std::size_t i = 0; i < vocab.size(); ++i) {
          os << vocab.words()[i] << ' ' << vocab.counts()[i] << '\n';
        }
      },
      kModule);
}

Vocab load_vocab(const std::string& path) {
  const std::string text = io::read_file(path, kModule);
  const auto ls = io::lines(text);
  if (ls.empty()) throw Error(kModule, path + ": empty vocab file");
  const auto header = io::split_nonempty(ls[0], ' ');
  std::optional<std::int64_t> size, min_count;
  if (header.size() == 2) {
    size = io::parse_int(header[0]);
    min_count = io::parse_int(header[1]);
  }
  if (!size || !min_count || *size < 0 || *min_count < 0) {
    throw Error(kModule, path + ": malformed vocab header at line 1");
  }
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].empty()) continue;
    const auto fields = io::split_nonempty(ls[i], ' ');
    const auto c = fields.size() == 2 ? io::parse_int(fields[1]) : std::nullopt;
    if (!c || *c < 0) {
      throw Error(kModule, path + ": malformed vocab entry at line " + std::to_string(i + 1));
    }
    words.emplace_back(fields[0]);
    counts.push_back(static_cast<std::uint64_t>(*c));
  }
  if (words.size() != static_cast<std::size_t>(*size)) {
    throw Error(kModule, path + ": header declares " + std::to_string(*size) + " words, found " +
                             std::to_string(words.size()));
  }
  return Vocab(std::move(words), std::move(counts), static_cast<std::uint64_t>(*min_count));
}

}  // namespace sentivec::corpus
