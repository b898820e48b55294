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

#include "zsaudio/template_registry.h"

#include <fstream>
#include <set>
#include <sstream>

#include "zsaudio/error.h"

namespace zsaudio::engine {

TemplateRegistry TemplateRegistry::Parse(std::string_view text) {
  TemplateRegistry registry;
  std::set<std::string> seen;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty()) continue;
    if (!seen.insert(std::string(line)).second) {
      throw ValidationError("duplicate template '" + std::string(line) +
                            "' on line " + std::to_string(line_number));
    }
    registry.templates_.push_back(
        {std::to_string(line_number), std::string(line)});
  }
  return registry;
}

TemplateRegistry TemplateRegistry::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const PromptTemplate* TemplateRegistry::Find(std::string_view id) const {
  for (const auto& t : templates_) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

const PromptTemplate* TemplateRegistry::FindByText(std::string_view text) const {
  for (const auto& t : templates_) {
    if (t.text == text) return &t;
  }
  return nullptr;
}

}  // namespace zsaudio::engine
