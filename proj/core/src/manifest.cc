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

#include "zsaudio/manifest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "zsaudio/error.h"

namespace zsaudio::embstore {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<DescriptionVariant, std::string_view>, 4>
    kVariantNames = {{{DescriptionVariant::kBase, "base"},
                      {DescriptionVariant::kContext, "context"},
                      {DescriptionVariant::kOntology, "ontology"},
                      {DescriptionVariant::kDictionary, "dictionary"}}};

class KeyChecker {
 public:
  KeyChecker(bool strict, std::vector<std::string>* warnings)
      : strict_(strict), warnings_(warnings) {}

  void Check(const json& object, std::initializer_list<std::string_view> known,
             const std::string& where) const {
    for (const auto& [key, value] : object.items()) {
      if (std::find(known.begin(), known.end(), key) != known.end()) continue;
      const std::string message = "unknown key '" + key + "' in " + where;
      if (strict_) throw ValidationError(message);
      if (warnings_ != nullptr) warnings_->push_back(message);
    }
  }

 private:
  bool strict_;
  std::vector<std::string>* warnings_;
};

const json& Require(const json& object, const char* key,
                    const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError("missing key '" + std::string(key) + "' in " + where);
  }
  return *it;
}

std::string RequireString(const json& object, const char* key,
                          const std::string& where) {
  const json& value = Require(object, key, where);
  if (!value.is_string()) {
    throw ValidationError("'" + std::string(key) + "' in " + where +
                          " must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

std::string_view ToString(TaskType task) {
  return task == TaskType::kSingleLabel ? "single_label" : "multi_label";
}

std::string_view ToString(DescriptionVariant variant) {
  for (const auto& [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "?";
}

std::optional<TaskType> ParseTaskType(std::string_view text) {
  if (text == "single_label") return TaskType::kSingleLabel;
  if (text == "multi_label") return TaskType::kMultiLabel;
  return std::nullopt;
}

std::optional<DescriptionVariant> ParseDescriptionVariant(
    std::string_view text) {
  for (const auto& [v, name] : kVariantNames) {
    if (name == text) return v;
  }
  return std::nullopt;
}

void ValidateManifest(const DatasetManifest& manifest) {
  const std::size_t num_classes = manifest.num_classes();
  std::unordered_set<std::string> class_ids;
  for (std::size_t k = 0; k < num_classes; ++k) {
    const ClassEntry& entry = manifest.classes[k];
    if (entry.class_id.empty()) {
      throw ValidationError("class " + std::to_string(k) + " has an empty id");
    }
    if (!class_ids.insert(entry.class_id).second) {
      throw ValidationError("duplicate class_id '" + entry.class_id + "'");
    }
    if (entry.raw_label.empty()) {
      throw ValidationError("class '" + entry.class_id +
                            "' has an empty raw_label");
    }
    for (const auto& [variant, text] : entry.descriptions) {
      if (text.empty()) {
        throw ValidationError("class '" + entry.class_id + "' has an empty " +
                              std::string(ToString(variant)) + " description");
      }
    }
  }

  const std::size_t num_samples = manifest.num_samples();
  std::unordered_set<std::string> sample_ids;
  std::vector<bool> row_seen(num_samples, false);
  for (const SampleEntry& sample : manifest.samples) {
    if (!sample_ids.insert(sample.sample_id).second) {
      throw ValidationError("duplicate sample_id '" + sample.sample_id + "'");
    }
    if (sample.truth.empty()) {
      throw ValidationError("sample '" + sample.sample_id +
                            "' has no ground-truth class");
    }
    if (manifest.task_type == TaskType::kSingleLabel &&
        sample.truth.size() != 1) {
      throw ValidationError("sample '" + sample.sample_id +
                            "' has " + std::to_string(sample.truth.size()) +
                            " classes in a single_label manifest");
    }
    for (std::size_t i = 0; i < sample.truth.size(); ++i) {
      const int c = sample.truth[i];
      if (c < 0 || static_cast<std::size_t>(c) >= num_classes) {
        throw ValidationError("sample '" + sample.sample_id +
                              "' references class index " + std::to_string(c) +
                              " outside [0, " + std::to_string(num_classes) +
                              ")");
      }
      if (i > 0 && sample.truth[i - 1] >= c) {
        throw ValidationError("sample '" + sample.sample_id +
                              "' truth must be sorted and unique");
      }
    }
    if (sample.row >= num_samples) {
      throw ValidationError("sample '" + sample.sample_id + "' row " +
                            std::to_string(sample.row) + " outside [0, " +
                            std::to_string(num_samples) + ")");
    }
    if (row_seen[sample.row]) {
      throw ValidationError("sample '" + sample.sample_id +
                            "' reuses row " + std::to_string(sample.row));
    }
    row_seen[sample.row] = true;
  }
}

DatasetManifest ParseManifest(std::string_view json_text,
                              const ManifestOptions& options,
                              std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("manifest parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("manifest must be a JSON object");

  const KeyChecker keys(options.strict, warnings);
  keys.Check(doc, {"dataset_id", "task_type", "classes", "samples"},
             "manifest");

  DatasetManifest manifest;
  manifest.dataset_id = RequireString(doc, "dataset_id", "manifest");
  const std::string task = RequireString(doc, "task_type", "manifest");
  const auto task_type = ParseTaskType(task);
  if (!task_type) throw ValidationError("unknown task_type '" + task + "'");
  manifest.task_type = *task_type;

  const json& classes = Require(doc, "classes", "manifest");
  if (!classes.is_array()) throw ValidationError("'classes' must be an array");
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const json& c = classes[k];
    const std::string where = "classes[" + std::to_string(k) + "]";
    if (!c.is_object()) throw ValidationError(where + " must be an object");
    keys.Check(c, {"class_id", "raw_label", "descriptions"}, where);
    ClassEntry entry;
    entry.class_id = RequireString(c, "class_id", where);
    entry.raw_label = RequireString(c, "raw_label", where);
    if (const auto it = c.find("descriptions"); it != c.end()) {
      if (!it->is_object()) {
        throw ValidationError(where + ".descriptions must be an object");
      }
      for (const auto& [name, text] : it->items()) {
        const auto variant = ParseDescriptionVariant(name);
        if (!variant) {
          keys.Check(json{{name, text}}, {}, where + ".descriptions");
          continue;
        }
        if (!text.is_string()) {
          throw ValidationError(where + ".descriptions." + name +
                                " must be a string");
        }
        entry.descriptions.emplace(*variant, text.get<std::string>());
      }
    }
    manifest.classes.push_back(std::move(entry));
  }

  const json& samples = Require(doc, "samples", "manifest");
  if (!samples.is_array()) throw ValidationError("'samples' must be an array");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const json& s = samples[i];
    const std::string where = "samples[" + std::to_string(i) + "]";
    if (!s.is_object()) throw ValidationError(where + " must be an object");
    keys.Check(s, {"sample_id", "truth", "row"}, where);
    SampleEntry entry;
    entry.sample_id = RequireString(s, "sample_id", where);
    const json& truth = Require(s, "truth", where);
    if (!truth.is_array()) throw ValidationError(where + ".truth must be an array");
    for (const json& t : truth) {
      if (!t.is_number_integer()) {
        throw ValidationError(where + ".truth entries must be integers");
      }
      entry.truth.push_back(t.get<int>());
    }
    std::sort(entry.truth.begin(), entry.truth.end());
    if (std::adjacent_find(entry.truth.begin(), entry.truth.end()) !=
        entry.truth.end()) {
      throw ValidationError("sample '" + entry.sample_id +
                            "' lists a class twice");
    }
    const json& row = Require(s, "row", where);
    if (!row.is_number_unsigned()) {
      throw ValidationError(where + ".row must be a non-negative integer");
    }
    entry.row = row.get<std::size_t>();
    manifest.samples.push_back(std::move(entry));
  }

  ValidateManifest(manifest);
  return manifest;
}

DatasetManifest LoadManifest(const std::filesystem::path& path,
                             const ManifestOptions& options,
                             std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseManifest(buffer.str(), options, warnings);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string SerializeManifest(const DatasetManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["dataset_id"] = manifest.dataset_id;
  doc["task_type"] = ToString(manifest.task_type);
  auto classes = nlohmann::ordered_json::array();
  for (const ClassEntry& c : manifest.classes) {
    nlohmann::ordered_json entry;
    entry["class_id"] = c.class_id;
    entry["raw_label"] = c.raw_label;
    auto descriptions = nlohmann::ordered_json::object();
    for (const auto& [variant, text] : c.descriptions) {
      descriptions[std::string(ToString(variant))] = text;
    }
    entry["descriptions"] = std::move(descriptions);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  auto samples = nlohmann::ordered_json::array();
  for (const SampleEntry& s : manifest.samples) {
    samples.push_back({{"sample_id", s.sample_id},
                       {"truth", s.truth},
                       {"row", s.row}});
  }
  doc["samples"] = std::move(samples);
  return doc.dump(2) + "\n";
}

}  // namespace zsaudio::embstore
