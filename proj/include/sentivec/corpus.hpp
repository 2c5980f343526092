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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentivec/rng.hpp"

namespace sentivec::corpus {

using WordId = std::int32_t;

/// Pre-tokenized documents. Tokens are non-empty and whitespace free.
struct TokenStream {
  std::vector<std::vector<std::string>> docs;

  std::size_t doc_count() const noexcept { return docs.size(); }
  std::size_t token_count() const noexcept;
};

/// Exact-match stop-word set.
struct StopWordSet {
  std::unordered_set<std::string> words;

  bool contains(std::string_view w) const { return words.count(std::string(w)) != 0; }
};

/// Word list ordered by descending count, ties lexicographic. The index is a
/// bijection onto [0, size()).
class Vocab {
 public:
  Vocab() = default;
  /// Takes words in their final order. Throws on duplicates or when a count
  /// falls below `min_count`.
  Vocab(std::vector<std::string> words, std::vector<std::uint64_t> counts, std::uint64_t min_count);

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  const std::string& word(WordId id) const { return words_.at(static_cast<std::size_t>(id)); }
  std::uint64_t count(WordId id) const { return counts_.at(static_cast<std::size_t>(id)); }
  std::optional<WordId> find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word).has_value(); }

  const std::vector<std::string>& words() const noexcept { return words_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t min_count() const noexcept { return min_count_; }
  /// Retained token occurrences; the sum of all counts.
  std::uint64_t total_tokens() const noexcept { return total_; }

  friend bool operator==(const Vocab& a, const Vocab& b) {
    return a.words_ == b.words_ && a.counts_ == b.counts_ && a.min_count_ == b.min_count_;
  }

 private:
  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, WordId> index_;
  std::uint64_t min_count_ = 0;
  std::uint64_t total_ = 0;
};

/// One document per non-empty line, tokens separated by spaces (runs of
/// separators produce no empty tokens). Rejects invalid UTF-8 with the byte
/// offset of the first bad sequence.
TokenStream load_corpus(const std::string& path);
TokenStream parse_corpus(std::string_view text);

/// One word per line; blank lines and lines starting with '#' are ignored.
StopWordSet load_stopwords(const std::string& path);
StopWordSet parse_stopwords(std::string_view text);

constexpr std::uint64_t kDefaultMinCount = 5;

/// Words with count >= min_count that are not stop words, ordered by
/// descending count then lexicographically.
Vocab build_vocab(const TokenStream& tokens, std::uint64_t min_count, const StopWordSet& stops);

/// Same word order as `vocab`, with counts taken from `tokens` (zero for
/// words that do not occur). The result has min_count 0. Used when vectors
/// were loaded from a file that carries no frequencies.
Vocab recount(const Vocab& vocab, const TokenStream& tokens);

/// Probability that one occurrence of a word with `count` out of `total`
/// retained tokens is dropped: max(0, 1 - sqrt(threshold / f)).
double discard_probability(std::uint64_t count, std::uint64_t total, double threshold) noexcept;

/// Drops out-of-vocabulary tokens and discards each in-vocab occurrence
/// independently with discard_probability. Documents left empty are kept
/// as empty documents so positions stay aligned with the input.
TokenStream subsample(const TokenStream& tokens, const Vocab& vocab, double threshold, Rng& rng);

/// Documents as word ids with out-of-vocabulary tokens removed.
std::vector<std::vector<WordId>> encode(const TokenStream& tokens, const Vocab& vocab);

/// Vocab file: header "<size> <min_count>", then "<word> <count>" per line.
void save_vocab(const Vocab& vocab, const std::string& path);
Vocab load_vocab(const std::string& path);

}  // namespace sentivec::corpus
