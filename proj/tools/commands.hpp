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

#include <string>
#include <vector>

#include "sentivec/config.hpp"

namespace sentivec::cli {

/// Settings shared by every command after config file, `--set` pairs and
/// flags have been folded together.
struct Context {
  PipelineConfig cfg;
  bool quiet = false;
};

/// Arguments that name command outputs or model files rather than
/// configurable inputs.
struct Args {
  std::vector<std::string> vectors;
  std::string out;
  std::string names;
  std::string gold;
  std::string export_lexicon;
  std::string model_out;
};

int cmd_vocab(const Context& ctx, const Args& args);
int cmd_train(const Context& ctx, const Args& args);
int cmd_seed_retrain(const Context& ctx, const Args& args);
int cmd_polarity(const Context& ctx, const Args& args);
int cmd_diff(const Context& ctx, const Args& args);
int cmd_project(const Context& ctx, const Args& args);
int cmd_classify(const Context& ctx, const Args& args);

/// File stems, made unique with _2, _3, ... suffixes in order of appearance.
std::vector<std::string> default_names(const std::vector<std::string>& paths);

}  // namespace sentivec::cli
