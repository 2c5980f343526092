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
#include <map>

#include "support/run.hpp"

namespace fs = std::filesystem;
using cli_run::run;
using cli_run::scenario;
using cli_run::slurp;

namespace {

void run_pipeline(const fs::path& dir) {
  for (const auto& step : cli_run::pipeline_steps()) {
    const auto r = run(dir, step);
    INFO(step[3], ": ", r.output);
    REQUIRE(r.exit_code == 0);
  }
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename()] = slurp(e.path());
  return files;
}

}  // namespace

TEST_CASE("bundled pipeline writes every output") {
  const auto dir = cli_run::scratch("cli_pipeline");
  run_pipeline(dir);
  for (const auto& f : cli_run::pipeline_outputs()) CHECK_MESSAGE(fs::exists(dir / f), f);
  const auto flips = slurp(dir / "flips.tsv");
  CHECK(flips.find("bold\tpositive\tnegative\tflip") != std::string::npos);
  // no temporaries left behind
  for (const auto& e : fs::directory_iterator(dir))
    CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
}

TEST_CASE("reruns are byte-identical and inputs stay untouched") {
  const auto before = snapshot(SENTIVEC_SCENARIO_DIR);
  const auto a = cli_run::scratch("cli_rerun_a");
  const auto b = cli_run::scratch("cli_rerun_b");
  run_pipeline(a);
  run_pipeline(b);
  CHECK(snapshot(a) == snapshot(b));
  CHECK(snapshot(SENTIVEC_SCENARIO_DIR) == before);
}

TEST_CASE("diffing a vectors file against itself finds no flips") {
  const auto dir = cli_run::scratch("cli_selfdiff");
  run_pipeline(dir);
  const auto r = run(dir, {"--quiet", "diff", "--vectors", "domain_seeded.vec", "domain_seeded.vec",
                           "--lexicon", scenario("lexicon_a.tsv"), "-o", "self.tsv"});
  REQUIRE(r.exit_code == 0);
  const auto text = slurp(dir / "self.tsv");
  CHECK(text.starts_with("word\tdomain_seeded\tdomain_seeded_2\tstatus\n"));
  CHECK(text.find("\tflip\n") == std::string::npos);
  CHECK(text.find("\tuncomparable\n") == std::string::npos);
}

TEST_CASE("errors are one line naming the module and context") {
  const auto dir = cli_run::scratch("cli_errors");
  run_pipeline(dir);

  const auto missing = run(dir, {"polarity", "--vectors", "domain_seeded.vec", "--lexicon",
                                 "/no/such/lexicon.tsv", "-o", "p.tsv"});
  CHECK(missing.exit_code != 0);
  CHECK(missing.output.starts_with("error: module="));
  CHECK(missing.output.find("/no/such/lexicon.tsv") != std::string::npos);
  CHECK(std::count(missing.output.begin(), missing.output.end(), '\n') == 1);
  CHECK(!fs::exists(dir / "p.tsv"));

  const auto key =
      run(dir, {"--set", "dimension=4", "vocab", "--corpus", scenario("general.txt"), "-o", "v"});
  CHECK(key.exit_code != 0);
  CHECK(key.output.starts_with("error: module=cli"));
  CHECK(key.output.find("dimension") != std::string::npos);

  const auto corrupt = run(dir, {"classify", "--vectors", scenario("words.txt"), "--docs",
                                 scenario("docs.tsv"), "-o", "m.json"});
  CHECK(corrupt.exit_code != 0);
  CHECK(corrupt.output.starts_with("error: module=embedding"));

  CHECK(run(dir, {"frobnicate"}).exit_code != 0);
}

TEST_CASE("flags override the config file") {
  const auto dir = cli_run::scratch("cli_precedence");
  const auto base = std::vector<std::string>{"--quiet", "--config", scenario("pipeline.conf")};
  auto args = base;
  for (const char* a : {"--set", "dim=7", "train", "--corpus", SENTIVEC_SCENARIO_DIR "/general.txt",
                        "--epochs", "1", "-o", "a.vec"})
    args.emplace_back(a);
  REQUIRE(run(dir, args).exit_code == 0);
  const auto text = slurp(dir / "a.vec");
  CHECK(text.substr(0, text.find('\n')).ends_with(" 7"));

  auto seeded = base;
  for (const char* a : {"--seed", "2", "train", "--corpus", SENTIVEC_SCENARIO_DIR "/general.txt",
                        "--epochs", "1", "-o", "b.vec"})
    seeded.emplace_back(a);
  REQUIRE(run(dir, seeded).exit_code == 0);
  seeded.back() = "c.vec";
  seeded[4] = "3";
  REQUIRE(run(dir, seeded).exit_code == 0);
  CHECK(slurp(dir / "b.vec") != slurp(dir / "c.vec"));
}
