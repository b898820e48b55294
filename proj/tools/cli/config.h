// Copyright 2026 The zsaudio Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZSAUDIO_TOOLS_CLI_CONFIG_H_
#define ZSAUDIO_TOOLS_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsaudio/folds.h"
#include "zsaudio/prompt_spec.h"

namespace zsaudio::cli {

enum class MetricChoice { kAuto, kAccuracy, kMap };

struct SetupConfig {
  std::string id;
  embstore::PromptSpec spec;
  std::filesystem::path path;  // empty when only rendering prompts
};

struct ExperimentConfig {
  std::filesystem::path manifest;
  std::filesystem::path audio;
  std::vector<SetupConfig> setups;
  MetricChoice metric = MetricChoice::kAuto;
  std::size_t folds = adaptive::kDefaultFolds;
  std::uint64_t seed = adaptive::kDefaultSeed;
  std::filesystem::path out = "zsaudio_out";
  bool strict = false;
  std::size_t threads = 1;
  std::filesystem::path templates;  // empty = built-in asset path
  std::optional<std::string> baseline;
  std::size_t top = 3;  // delta rows listed per adaptive run

  const SetupConfig* FindSetup(std::string_view id) const;
};

// Parses "<id>=<spec>[:<path>]". The path is required unless
// `path_optional` is set.
SetupConfig ParseSetupFlag(std::string_view text, bool path_optional = false);

std::optional<MetricChoice> ParseMetricChoice(std::string_view text);

// Reads a JSON config; relative paths resolve against the config's folder.
//   {"manifest", "audio", "setups": [{"id", "spec", "path"}], "metric",
//    "folds", "seed", "out", "strict", "threads", "templates", "baseline",
//    "top"}
// "spec" may be the flag string form or an object
//   {"format", "template_id", "description_variant"}.
ExperimentConfig LoadConfigFile(const std::filesystem::path& path);

// Throws ValidationError for duplicate or reserved setup ids.
void CheckSetupIds(const ExperimentConfig& config);

inline constexpr std::string_view kEnsembleSetupId = "pt_ensemble";

}  // namespace zsaudio::cli

#endif  // ZSAUDIO_TOOLS_CLI_CONFIG_H_
