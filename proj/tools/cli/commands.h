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

#ifndef ZSAUDIO_TOOLS_CLI_COMMANDS_H_
#define ZSAUDIO_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cli/config.h"
#include "zsaudio/bundle.h"
#include "zsaudio/manifest.h"
#include "zsaudio/metrics.h"
#include "zsaudio/template_registry.h"

namespace zsaudio::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitContract = 3;

struct Bundle {
  embstore::DatasetManifest manifest;
  embstore::EmbeddingMatrix audio;
  std::vector<embstore::TextSet> texts;  // config order
  std::vector<std::string> warnings;
};

// Loads manifest, audio and every setup's text matrix. Missing files raise
// IoError naming the path.
Bundle LoadBundle(const ExperimentConfig& config);

// Registry from config.templates, or the shipped asset when unset.
engine::TemplateRegistry LoadTemplates(const ExperimentConfig& config);

metrics::MetricKind ResolveMetric(MetricChoice choice, embstore::TaskType task);

// Each command writes below config.out:
//   reports/<setup_id>.json, predictions/<setup_id>.jsonl,
//   adaptive/fold<i>.map.json, summary.md
// The return value of CmdValidate is the exit code; the others throw
// zsaudio::Error on failure.
int CmdValidate(const ExperimentConfig& config, std::ostream& out);
void CmdClassify(const ExperimentConfig& config, std::string_view setup_id,
                 std::ostream& log);
void CmdEval(const ExperimentConfig& config, std::ostream& log);
void CmdAdaptive(const ExperimentConfig& config, std::ostream& log);

// Writes {"class_index", "setup_id", "text", "spec"} lines for every
// configured setup; with `grid` also for the four label formats, every
// registry template and every description variant present on all classes.
void CmdRender(const ExperimentConfig& config, bool grid, std::ostream& out);

void CmdNormalize(const std::string& input, const std::string& output);

// Entry point behind the zsaudio binary.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace zsaudio::cli

#endif  // ZSAUDIO_TOOLS_CLI_COMMANDS_H_
