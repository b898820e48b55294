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

#ifndef ZSAUDIO_MANIFEST_H_
#define ZSAUDIO_MANIFEST_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zsaudio::embstore {

enum class TaskType { kSingleLabel, kMultiLabel };

// Description flavours a class entry may carry. Declaration order is the
// default tie-break priority for multi-variant selection.
enum class DescriptionVariant { kBase, kContext, kOntology, kDictionary };

inline constexpr std::array<DescriptionVariant, 4> kAllDescriptionVariants = {
    DescriptionVariant::kBase, DescriptionVariant::kContext,
    DescriptionVariant::kOntology, DescriptionVariant::kDictionary};

std::string_view ToString(TaskType task);
std::string_view ToString(DescriptionVariant variant);
std::optional<TaskType> ParseTaskType(std::string_view text);
std::optional<DescriptionVariant> ParseDescriptionVariant(std::string_view text);

struct ClassEntry {
  std::string class_id;
  std::string raw_label;
  std::map<DescriptionVariant, std::string> descriptions;
};

struct SampleEntry {
  std::string sample_id;
  std::vector<int> truth;  // sorted, unique class indices
  std::size_t row = 0;     // row in the audio embedding matrix
};

struct DatasetManifest {
  std::string dataset_id;
  TaskType task_type = TaskType::kSingleLabel;
  std::vector<ClassEntry> classes;
  std::vector<SampleEntry> samples;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t num_samples() const { return samples.size(); }
};

// Throws ValidationError naming the offending entity if any manifest
// invariant is broken.
void ValidateManifest(const DatasetManifest& manifest);

struct ManifestOptions {
  // Reject unknown JSON keys instead of collecting warnings.
  bool strict = false;
};

// Parses the JSON manifest text. Unknown keys are reported through
// `warnings` (non-strict) or rejected (strict).
DatasetManifest ParseManifest(std::string_view json_text,
                              const ManifestOptions& options = {},
                              std::vector<std::string>* warnings = nullptr);

DatasetManifest LoadManifest(const std::filesystem::path& path,
                             const ManifestOptions& options = {},
                             std::vector<std::string>* warnings = nullptr);

// Inverse of ParseManifest; used by fixtures and tools that emit manifests.
std::string SerializeManifest(const DatasetManifest& manifest);

}  // namespace zsaudio::embstore

#endif  // ZSAUDIO_MANIFEST_H_
