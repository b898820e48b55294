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

#ifndef ZSAUDIO_BUNDLE_H_
#define ZSAUDIO_BUNDLE_H_

#include <string>
#include <vector>

#include "zsaudio/embedding.h"
#include "zsaudio/manifest.h"
#include "zsaudio/prompt_spec.h"

namespace zsaudio::embstore {

// One text-embedding matrix together with the recipe that produced it.
struct TextSet {
  std::string setup_id;
  PromptSpec spec;
  EmbeddingMatrix embeddings;
};

struct Violation {
  std::string subject;  // "audio", or the setup id / prompt spec concerned
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct BundleOptions {
  // Also require every matrix to carry the normalized flag.
  bool require_normalized = false;
};

// Cross-checks shapes between the manifest, the audio matrix and every text
// matrix. Collects every violation instead of stopping at the first.
ValidationReport ValidateBundle(const DatasetManifest& manifest,
                                const EmbeddingMatrix& audio,
                                const std::vector<TextSet>& text_sets,
                                const BundleOptions& options = {});

}  // namespace zsaudio::embstore

#endif  // ZSAUDIO_BUNDLE_H_
