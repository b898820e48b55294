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

#ifndef ZSAUDIO_PROMPT_H_
#define ZSAUDIO_PROMPT_H_

#include <string>
#include <string_view>
#include <vector>

#include "zsaudio/manifest.h"
#include "zsaudio/prompt_spec.h"
#include "zsaudio/template_registry.h"

namespace zsaudio::engine {

using embstore::PromptFormat;
using embstore::PromptSpec;

// Case changes below touch only the first byte and only if it is ASCII;
// multi-byte UTF-8 leads are left as they are.

// Replaces underscores with spaces, collapses whitespace runs to a single
// space and trims both ends. Throws ContractError on empty input or input
// that is only separators.
std::string SanitizeLabel(std::string_view raw_label);

// lower/upper set the case of the first character; the *_period variants
// make the label end in exactly one '.'.
std::string FormatLabel(std::string_view label, PromptFormat format);

// "<template> <label>." with the first character uppercased. The template
// must be non-empty with no trailing whitespace.
std::string RenderTemplate(std::string_view template_text,
                           std::string_view label);

// "<Label>. <Description>." Label and description are capitalised and the
// result ends in a single period.
std::string RenderDescriptionPrompt(std::string_view label,
                                    std::string_view description);

struct RenderedPrompt {
  int class_index = 0;
  std::string text;
  PromptSpec spec;
};

// Renders the text for every class of `manifest` under `spec`.
//   class only   FormatLabel(sanitized, spec.format)
//   template     RenderTemplate(template, lowercase-first sanitized label);
//                spec.format is not consulted
//   description  label cased by spec.format (period dropped) + ". " +
//                description; upper/upper_period give RenderDescriptionPrompt
std::vector<RenderedPrompt> RenderPrompts(
    const embstore::DatasetManifest& manifest, const PromptSpec& spec,
    const TemplateRegistry* templates = nullptr);

}  // namespace zsaudio::engine

#endif  // ZSAUDIO_PROMPT_H_
