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

#include "zsaudio/bundle.h"

#include <set>

namespace zsaudio::embstore {
namespace {

std::string Subject(const TextSet& set) {
  return set.setup_id.empty() ? ToString(set.spec)
                              : set.setup_id + " (" + ToString(set.spec) + ")";
}

}  // namespace

ValidationReport ValidateBundle(const DatasetManifest& manifest,
                                const EmbeddingMatrix& audio,
                                const std::vector<TextSet>& text_sets,
                                const BundleOptions& options) {
  ValidationReport report;
  auto add = [&report](std::string subject, std::string message) {
    report.violations.push_back({std::move(subject), std::move(message)});
  };

  const std::size_t n = manifest.num_samples();
  const std::size_t k = manifest.num_classes();
  if (audio.rows() != n) {
    add("audio", "audio matrix has " + std::to_string(audio.rows()) +
                     " rows but the manifest lists " + std::to_string(n) +
                     " samples");
  }
  if (options.require_normalized && !audio.normalized()) {
    add("audio", "audio matrix is not flagged normalized");
  }

  std::set<std::string> seen_ids;
  for (const TextSet& set : text_sets) {
    const std::string subject = Subject(set);
    if (!set.setup_id.empty() && !seen_ids.insert(set.setup_id).second) {
      add(subject, "duplicate setup id");
    }
    if (set.spec.template_id && set.spec.description_variant) {
      add(subject, "prompt spec combines a template with a description");
    }
    if (set.embeddings.rows() != k) {
      add(subject, "text matrix has " + std::to_string(set.embeddings.rows()) +
                       " rows but the manifest lists " + std::to_string(k) +
                       " classes");
    }
    if (set.embeddings.dim() != audio.dim()) {
      add(subject, "dim mismatch: audio=" + std::to_string(audio.dim()) +
                       " text=" + std::to_string(set.embeddings.dim()));
    }
    if (options.require_normalized && !set.embeddings.normalized()) {
      add(subject, "text matrix is not flagged normalized");
    }
    if (set.spec.description_variant) {
      for (const ClassEntry& entry : manifest.classes) {
        if (!entry.descriptions.contains(*set.spec.description_variant)) {
          add(subject, "class '" + entry.class_id + "' has no " +
                           std::string(ToString(*set.spec.description_variant)) +
                           " description");
        }
      }
    }
  }
  return report;
}

}  // namespace zsaudio::embstore
