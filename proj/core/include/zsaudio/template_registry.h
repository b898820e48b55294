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

#ifndef ZSAUDIO_TEMPLATE_REGISTRY_H_
#define ZSAUDIO_TEMPLATE_REGISTRY_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zsaudio::engine {

struct PromptTemplate {
  std::string id;  // 1-based line number in the registry file
  std::string text;
};

// Prompt templates loaded from a UTF-8 text file: one template per line,
// the line number is the template id, '#' starts a comment, blank lines
// are skipped.
class TemplateRegistry {
 public:
  static TemplateRegistry Parse(std::string_view text);
  static TemplateRegistry Load(const std::filesystem::path& path);

  const std::vector<PromptTemplate>& templates() const { return templates_; }
  std::size_t size() const { return templates_.size(); }

  const PromptTemplate* Find(std::string_view id) const;
  const PromptTemplate* FindByText(std::string_view text) const;

 private:
  std::vector<PromptTemplate> templates_;
};

// Template conventionally used as the zero-shot baseline.
inline constexpr std::string_view kBaselineTemplate = "This is a sound of";

}  // namespace zsaudio::engine

#endif  // ZSAUDIO_TEMPLATE_REGISTRY_H_
