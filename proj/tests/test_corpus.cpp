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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "sentivec/corpus.hpp"
#include "sentivec/error.hpp"

using namespace sentivec;
using namespace sentivec::corpus;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("sentivec_corpus_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

TokenStream stream(std::vector<std::vector<std::string>> docs) {
  return TokenStream{std::move(docs)};
}

}  // namespace

TEST_CASE("load_corpus counts documents and tokens") {
  const auto ts = load_corpus(temp_file("two.txt", "a b\nc\n"));
  CHECK(ts.doc_count() == 2);
  CHECK(ts.token_count() == 3);

  const auto empty = load_corpus(temp_file("empty.txt", ""));
  CHECK(empty.doc_count() == 0);
  CHECK(empty.token_count() == 0);

  const auto dbl = load_corpus(temp_file("dbl.txt", "a  b\n"));
  REQUIRE(dbl.doc_count() == 1);
  CHECK(dbl.docs[0] == std::vector<std::string>{"a", "b"});
}

TEST_CASE("load_corpus skips blank lines and handles CRLF") {
  const auto ts = parse_corpus("x y\r\n\r\n\nz\n");
  CHECK(ts.doc_count() == 2);
  CHECK(ts.docs[0] == std::vector<std::string>{"x", "y"});
}

TEST_CASE("load_corpus errors") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.txt"), Error);
  try {
    parse_corpus(std::string("ok\n\xff bad", 9));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.module() == "corpus");
    CHECK(std::string(e.what()).find("byte offset 3") != std::string::npos);
  }
  // truncated multi-byte sequence, overlong encoding
  CHECK_THROWS_AS(parse_corpus("\xe4\xb8"), Error);
  CHECK_THROWS_AS(parse_corpus("\xc0\xaf"), Error);
  // valid CJK passes
  CHECK(parse_corpus("\xe4\xb8\xad\xe6\x96\x87 x").token_count() == 2);
}

TEST_CASE("build_vocab filters by threshold and stop words") {
  const auto v = build_vocab(stream({{"a", "b", "a"}}), 2, {});
  REQUIRE(v.size() == 1);
  CHECK(v.word(0) == "a");
  CHECK(v.count(0) == 2);

  StopWordSet stops;
  stops.words = {"the"};
  const auto v2 = build_vocab(stream({{"the", "x", "the", "x"}}), 1, stops);
  REQUIRE(v2.size() == 1);
  CHECK(v2.word(0) == "x");
  CHECK(v2.count(0) == 2);

  CHECK(build_vocab(stream({}), 1, {}).empty());
  CHECK_THROWS_AS(build_vocab(stream({}), 0, {}), Error);
}

TEST_CASE("min_count is inclusive: a word seen exactly five times is kept by default") {
  const auto v =
      build_vocab(stream({{"w", "w", "w", "w", "w", "u", "u", "u", "u"}}), kDefaultMinCount, {});
  REQUIRE(v.size() == 1);
  CHECK(v.word(0) == "w");
}

TEST_CASE("vocab order is count descending then lexicographic, and deterministic") {
  const auto ts = stream({{"b", "c", "a", "c", "b", "c", "d"}, {"a", "e"}});
  const auto v = build_vocab(ts, 1, {});
  CHECK(v.words() == std::vector<std::string>{"c", "a", "b", "d", "e"});
  CHECK(v.total_tokens() == 9);
  for (std::size_t i = 0; i < v.size(); ++i)
    CHECK(*v.find(v.word(static_cast<WordId>(i))) == static_cast<WordId>(i));
  CHECK(build_vocab(ts, 1, {}) == v);
}

TEST_CASE("stop-word file ignores comments and blank lines") {
  const auto s = parse_stopwords("# list\nthe\n\n  of \n#x\n");
  CHECK(s.words.size() == 2);
  CHECK(s.contains("the"));
  CHECK(s.contains("of"));
  CHECK_FALSE(s.contains("#x"));
}

TEST_CASE("discard probability") {
  CHECK(discard_probability(4, 100, 0.0) == 0.0);
  // f = 4 * threshold -> 1 - sqrt(1/4)
  CHECK(discard_probability(40, 1000, 0.01) == doctest::Approx(0.5).epsilon(1e-12));
  // f <= threshold never discards
  CHECK(discard_probability(1, 1000, 0.001) == 0.0);
  CHECK(discard_probability(1, 1000, 0.5) == 0.0);
  for (std::uint64_t c = 1; c <= 1000; c *= 3) {
    const double p = discard_probability(c, 1000, 1e-4);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("subsample with threshold 0 keeps exactly the in-vocab tokens") {
  const auto ts = stream({{"a", "zz", "b", "a"}, {"q"}});
  const auto v = build_vocab(stream({{"a", "b"}}), 1, {});
  Rng rng(1);
  const auto out = subsample(ts, v, 0.0, rng);
  REQUIRE(out.doc_count() == 2);
  CHECK(out.docs[0] == std::vector<std::string>{"a", "b", "a"});
  CHECK(out.docs[1].empty());
}

TEST_CASE("subsample is reproducible and matches the discard rate") {
  std::vector<std::string> doc;
  for (int i = 0; i < 20000; ++i) doc.push_back(i % 4 == 0 ? "rare" : "common");
  const auto ts = stream({doc});
  const auto v = build_vocab(ts, 1, {});
  Rng r1(42), r2(42);
  const auto a = subsample(ts, v, 0.1, r1);
  const auto b = subsample(ts, v, 0.1, r2);
  CHECK(a.docs == b.docs);
  // f(common) = 0.75 -> p = 1 - sqrt(0.1/0.75)
  const double p = 1.0 - std::sqrt(0.1 / 0.75);
  std::size_t kept = 0;
  for (const auto& t : a.docs[0]) kept += t == "common";
  const double observed = 1.0 - static_cast<double>(kept) / 15000.0;
  CHECK(observed == doctest::Approx(p).epsilon(0.05));
}

TEST_CASE("vocab file round trip and recount") {
  const auto v = build_vocab(stream({{"x", "y", "x", "z"}}), 1, {});
  const auto path = (std::filesystem::temp_directory_path() / "sentivec_vocab.txt").string();
  save_vocab(v, path);
  CHECK(load_vocab(path) == v);
  CHECK_THROWS_AS(load_vocab(temp_file("badvocab.txt", "2 1\nx 3\n")), Error);

  const auto r = recount(v, stream({{"y", "y", "q"}}));
  CHECK(r.words() == v.words());
  CHECK(r.counts() == std::vector<std::uint64_t>{0, 2, 0});
}
