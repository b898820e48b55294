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

#ifndef ZSAUDIO_PROMPT_SPEC_H_
#define ZSAUDIO_PROMPT_SPEC_H_

#include <optional>
#include <string>
#include <string_view>

#include "zsaudio/manifest.h"

namespace zsaudio::embstore {

// Capitalisation / terminal punctuation applied to a bare class label.
enum class PromptFormat { kLower, kLowerPeriod, kUpper, kUpperPeriod };

std::string_view ToString(PromptFormat format);
std::optional<PromptFormat> ParsePromptFormat(std::string_view text);

// Describes how the text behind one text-embedding matrix was produced:
//   label only               format set, nothing else
//   template + label         template_id set
//   label + description      description_variant set
// A template and a description are never combined.
struct PromptSpec {
  PromptFormat format = PromptFormat::kUpperPeriod;
  std::optional<std::string> template_id;
  std::optional<DescriptionVariant> description_variant;

  bool is_class_only() const {
    return !template_id && !description_variant;
  }

  friend bool operator==(const PromptSpec&, const PromptSpec&) = default;
};

// Text form used on the command line and in config files:
//   <format>[,tpl=<template_id>][,desc=<variant>]
// e.g. "upper_period", "lower,tpl=7", "upper,desc=context".
// A template_id of "none" is the same as omitting it.
std::string ToString(const PromptSpec& spec);
PromptSpec ParsePromptSpec(std::string_view text);

// Throws ContractError when the spec combines a template and a description.
void ValidatePromptSpec(const PromptSpec& spec);

}  // namespace zsaudio::embstore

#endif  // ZSAUDIO_PROMPT_SPEC_H_
