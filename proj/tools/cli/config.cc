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

#include "cli/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zsaudio/error.h"

namespace zsaudio::cli {
namespace {

using nlohmann::json;

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

embstore::PromptSpec SpecFromJson(const json& value) {
  if (value.is_string()) {
    return embstore::ParsePromptSpec(value.get<std::string>());
  }
  if (!value.is_object()) {
    throw ValidationError("setup 'spec' must be a string or an object");
  }
  std::string text = value.value("format", std::string("upper_period"));
  if (value.contains("template_id") && !value["template_id"].is_null()) {
    text += ",tpl=" + value["template_id"].get<std::string>();
  }
  if (value.contains("description_variant") &&
      !value["description_variant"].is_null()) {
    text += ",desc=" + value["description_variant"].get<std::string>();
  }
  return embstore::ParsePromptSpec(text);
}

}  // namespace

const SetupConfig* ExperimentConfig::FindSetup(std::string_view id) const {
  for (const SetupConfig& s : setups) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

SetupConfig ParseSetupFlag(std::string_view text, bool path_optional) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ValidationError("--setup expects <id>=<spec>:<path>, got '" +
                          std::string(text) + "'");
  }
  SetupConfig setup;
  setup.id = std::string(text.substr(0, eq));
  std::string_view rest = text.substr(eq + 1);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    if (!path_optional) {
      throw ValidationError("--setup '" + setup.id + "' is missing ':<path>'");
    }
    setup.spec = embstore::ParsePromptSpec(rest);
    return setup;
  }
  setup.spec = embstore::ParsePromptSpec(rest.substr(0, colon));
  setup.path = std::string(rest.substr(colon + 1));
  if (setup.path.empty() && !path_optional) {
    throw ValidationError("--setup '" + setup.id + "' has an empty path");
  }
  return setup;
}

std::optional<MetricChoice> ParseMetricChoice(std::string_view text) {
  if (text == "auto") return MetricChoice::kAuto;
  if (text == "accuracy") return MetricChoice::kAccuracy;
  if (text == "map") return MetricChoice::kMap;
  return std::nullopt;
}

ExperimentConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();

  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");

  const auto base = path.parent_path();
  ExperimentConfig config;
  try {
    if (doc.contains("manifest")) {
      config.manifest = Resolve(base, doc["manifest"].get<std::string>());
    }
    if (doc.contains("audio")) {
      config.audio = Resolve(base, doc["audio"].get<std::string>());
    }
    if (doc.contains("templates")) {
      config.templates = Resolve(base, doc["templates"].get<std::string>());
    }
    if (doc.contains("out")) config.out = Resolve(base, doc["out"].get<std::string>());
    if (doc.contains("metric")) {
      const auto metric = ParseMetricChoice(doc["metric"].get<std::string>());
      if (!metric) throw ValidationError("unknown metric in config");
      config.metric = *metric;
    }
    config.folds = doc.value("folds", config.folds);
    config.seed = doc.value("seed", config.seed);
    config.strict = doc.value("strict", config.strict);
    config.threads = doc.value("threads", config.threads);
    config.top = doc.value("top", config.top);
    if (doc.contains("baseline")) config.baseline = doc["baseline"].get<std::string>();
    if (doc.contains("setups")) {
      for (const json& s : doc["setups"]) {
        SetupConfig setup;
        setup.id = s.at("id").get<std::string>();
        setup.spec = SpecFromJson(s.at("spec"));
        if (s.contains("path")) setup.path = Resolve(base, s["path"].get<std::string>());
        config.setups.push_back(std::move(setup));
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return config;
}

void CheckSetupIds(const ExperimentConfig& config) {
  std::set<std::string> seen;
  for (const SetupConfig& s : config.setups) {
    if (s.id == kEnsembleSetupId) {
      throw ValidationError("setup id '" + s.id + "' is reserved");
    }
    if (s.id.find('/') != std::string::npos || s.id == "." || s.id == "..") {
      throw ValidationError("setup id '" + s.id + "' is not a valid file name");
    }
    if (!seen.insert(s.id).second) {
      throw ValidationError("duplicate setup id '" + s.id + "'");
    }
  }
}

}  // namespace zsaudio::cli
