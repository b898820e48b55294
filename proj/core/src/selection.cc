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

#include "zsaudio/selection.h"

#include <algorithm>

#include "json.hpp"
#include "zsaudio/error.h"

namespace zsaudio::adaptive {
namespace {

template <typename T>
const T* FindSetup(std::span<const T> items, std::string_view id) {
  for (const T& item : items) {
    if (item.setup_id == id) return &item;
  }
  return nullptr;
}

}  // namespace

SelectionMap BuildSelectionMap(std::span<const SetupPerformance> performance,
                               std::string_view baseline_id) {
  const SetupPerformance* baseline = FindSetup(performance, baseline_id);
  if (baseline == nullptr) {
    throw ContractError("baseline setup '" + std::string(baseline_id) +
                        "' has no performance table");
  }
  const std::size_t k = baseline->per_class.size();
  for (const SetupPerformance& p : performance) {
    if (p.per_class.size() != k) {
      throw ContractError("setup '" + p.setup_id + "' covers " +
                          std::to_string(p.per_class.size()) +
                          " classes, baseline covers " + std::to_string(k));
    }
  }

  SelectionMap map;
  map.baseline = std::string(baseline_id);
  map.choices.assign(k, map.baseline);
  for (std::size_t c = 0; c < k; ++c) {
    if (!baseline->per_class[c]) continue;
    double best = *baseline->per_class[c];
    for (const SetupPerformance& p : performance) {
      if (&p == baseline || !p.per_class[c]) continue;
      if (*p.per_class[c] > best) {
        best = *p.per_class[c];
        map.choices[c] = p.setup_id;
      }
    }
  }
  return map;
}

engine::ScoreMatrix ApplySelection(const SelectionMap& map,
                                   std::span<const CandidateSetup> setups,
                                   const embstore::EmbeddingMatrix& audio,
                                   std::size_t threads) {
  const std::size_t k = map.choices.size();
  std::vector<const CandidateSetup*> chosen(k);
  for (std::size_t c = 0; c < k; ++c) {
    chosen[c] = FindSetup(setups, map.choices[c]);
    if (chosen[c] == nullptr) {
      throw ContractError("selection map references unknown setup '" +
                          map.choices[c] + "'");
    }
    if (chosen[c]->embeddings.rows() != k) {
      throw ContractError("setup '" + chosen[c]->setup_id + "' has " +
                          std::to_string(chosen[c]->embeddings.rows()) +
                          " rows, map covers " + std::to_string(k) + " classes");
    }
  }
  const std::size_t dim = audio.dim();
  std::vector<float> composed;
  composed.reserve(k * dim);
  bool normalized = true;
  for (std::size_t c = 0; c < k; ++c) {
    const auto& text = chosen[c]->embeddings;
    if (text.dim() != dim) {
      throw ContractError("setup '" + chosen[c]->setup_id +
                          "' dim differs from audio");
    }
    normalized = normalized && text.normalized();
    const auto row = text.row(c);
    composed.insert(composed.end(), row.begin(), row.end());
  }
  const embstore::EmbeddingMatrix text(k, dim, std::move(composed), normalized);
  engine::SimilarityOptions options;
  options.threads = threads;
  const engine::ScoreMatrix raw = engine::Similarity(audio, text, options);
  return engine::ScoreMatrix(raw.rows(), raw.cols(),
                             {raw.values().begin(), raw.values().end()},
                             map.choices);
}

engine::ScoreMatrix ComposeScores(const SelectionMap& map,
                                  std::span<const SetupScores> scores) {
  const std::size_t k = map.choices.size();
  std::vector<const engine::ScoreMatrix*> chosen(k);
  std::size_t n = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const SetupScores* s = FindSetup(scores, map.choices[c]);
    if (s == nullptr) {
      throw ContractError("selection map references unknown setup '" +
                          map.choices[c] + "'");
    }
    if (s->scores.cols() != k) {
      throw ContractError("setup '" + s->setup_id + "' scores have " +
                          std::to_string(s->scores.cols()) + " columns");
    }
    if (c > 0 && s->scores.rows() != n) {
      throw ContractError("setup score matrices differ in row count");
    }
    n = s->scores.rows();
    chosen[c] = &s->scores;
  }
  std::vector<double> values(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) values[i * k + c] = chosen[c]->at(i, c);
  }
  return engine::ScoreMatrix(n, k, std::move(values), map.choices);
}

std::string ToJson(const SelectionMap& map,
                   const embstore::DatasetManifest& manifest) {
  if (map.choices.size() != manifest.num_classes()) {
    throw ContractError("selection map does not match the manifest classes");
  }
  nlohmann::ordered_json doc;
  doc["baseline"] = map.baseline;
  nlohmann::ordered_json choices = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < map.choices.size(); ++c) {
    choices[manifest.classes[c].class_id] = map.choices[c];
  }
  doc["choices"] = std::move(choices);
  return doc.dump(2) + "\n";
}

}  // namespace zsaudio::adaptive
