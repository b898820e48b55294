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

#include "zsaudio/prompt.h"

#include "zsaudio/error.h"

namespace zsaudio::engine {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

char AsciiUpper(char c) { return (c >= 'a' && c <= 'z') ? c - 'a' + 'A' : c; }
char AsciiLower(char c) { return (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c; }

std::string WithFirst(std::string text, char (*transform)(char)) {
  if (!text.empty()) text[0] = transform(text[0]);
  return text;
}

std::string WithTerminalPeriod(std::string text) {
  if (text.empty() || text.back() != '.') text.push_back('.');
  return text;
}

std::string_view TrimSpaces(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

PromptFormat WithoutPeriod(PromptFormat format) {
  switch (format) {
    case PromptFormat::kLowerPeriod:
      return PromptFormat::kLower;
    case PromptFormat::kUpperPeriod:
      return PromptFormat::kUpper;
    default:
      return format;
  }
}

}  // namespace

std::string SanitizeLabel(std::string_view raw_label) {
  if (raw_label.empty()) throw ContractError("cannot sanitize an empty label");
  std::string out;
  out.reserve(raw_label.size());
  bool pending_space = false;
  for (char c : raw_label) {
    if (c == '_' || IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  if (out.empty()) {
    throw ContractError("label '" + std::string(raw_label) +
                        "' is empty after sanitizing");
  }
  return out;
}

std::string FormatLabel(std::string_view label, PromptFormat format) {
  std::string out(label);
  switch (format) {
    case PromptFormat::kLower:
      return WithFirst(std::move(out), AsciiLower);
    case PromptFormat::kLowerPeriod:
      return WithTerminalPeriod(WithFirst(std::move(out), AsciiLower));
    case PromptFormat::kUpper:
      return WithFirst(std::move(out), AsciiUpper);
    case PromptFormat::kUpperPeriod:
      return WithTerminalPeriod(WithFirst(std::move(out), AsciiUpper));
  }
  return out;
}

std::string RenderTemplate(std::string_view template_text,
                           std::string_view label) {
  if (template_text.empty()) {
    throw ContractError(
        "empty template; class-label-only prompts go through FormatLabel");
  }
  if (IsSpace(template_text.back())) {
    throw ContractError("template '" + std::string(template_text) +
                        "' has trailing whitespace");
  }
  std::string out(template_text);
  out.push_back(' ');
  out.append(label);
  return WithFirst(WithTerminalPeriod(std::move(out)), AsciiUpper);
}

std::string RenderDescriptionPrompt(std::string_view label,
                                    std::string_view description) {
  const std::string_view trimmed = TrimSpaces(description);
  if (trimmed.empty()) throw ContractError("empty class description");
  std::string out = FormatLabel(label, PromptFormat::kUpper);
  out += ". ";
  out += WithTerminalPeriod(WithFirst(std::string(trimmed), AsciiUpper));
  return out;
}

std::vector<RenderedPrompt> RenderPrompts(
    const embstore::DatasetManifest& manifest, const PromptSpec& spec,
    const TemplateRegistry* templates) {
  embstore::ValidatePromptSpec(spec);
  const PromptTemplate* tmpl = nullptr;
  if (spec.template_id) {
    if (templates == nullptr) {
      throw ContractError("prompt spec '" + embstore::ToString(spec) +
                          "' needs a template registry");
    }
    tmpl = templates->Find(*spec.template_id);
    if (tmpl == nullptr) {
      throw ValidationError("unknown template id '" + *spec.template_id + "'");
    }
  }

  std::vector<RenderedPrompt> prompts;
  prompts.reserve(manifest.num_classes());
  for (std::size_t k = 0; k < manifest.num_classes(); ++k) {
    const embstore::ClassEntry& entry = manifest.classes[k];
    const std::string label = SanitizeLabel(entry.raw_label);
    std::string text;
    if (tmpl != nullptr) {
      text = RenderTemplate(tmpl->text, FormatLabel(label, PromptFormat::kLower));
    } else if (spec.description_variant) {
      const auto it = entry.descriptions.find(*spec.description_variant);
      if (it == entry.descriptions.end()) {
        throw ValidationError(
            "class '" + entry.class_id + "' has no " +
            std::string(embstore::ToString(*spec.description_variant)) +
            " description");
      }
      const PromptFormat label_format = WithoutPeriod(spec.format);
      if (label_format == PromptFormat::kUpper) {
        text = RenderDescriptionPrompt(label, it->second);
      } else {
        const std::string_view trimmed = TrimSpaces(it->second);
        if (trimmed.empty()) throw ContractError("empty class description");
        text = FormatLabel(label, label_format) + ". " +
               WithTerminalPeriod(WithFirst(std::string(trimmed), AsciiUpper));
      }
    } else {
      text = FormatLabel(label, spec.format);
    }
    prompts.push_back({static_cast<int>(k), std::move(text), spec});
  }
  return prompts;
}

}  // namespace zsaudio::engine
