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

#ifndef ZSAUDIO_SELECTION_H_
#define ZSAUDIO_SELECTION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsaudio/bundle.h"
#include "zsaudio/manifest.h"
#include "zsaudio/scoring.h"

namespace zsaudio::adaptive {

// A prompt setup offered to the selector: one text matrix with K rows.
using CandidateSetup = embstore::TextSet;

// Training performance of one uniform setup, indexed by class. nullopt means
// the class was undefined on the training samples.
struct SetupPerformance {
  std::string setup_id;
  std::vector<std::optional<double>> per_class;
};

// Per-class choice of setup.
struct SelectionMap {
  std::string baseline;
  std::vector<std::string> choices;  // choices[k] is the setup for class k

  friend bool operator==(const SelectionMap&, const SelectionMap&) = default;
};

// For every class keep the baseline unless another setup is strictly better;
// among several better setups the highest value wins and ties go to the
// earlier one in `performance` (the baseline always ranks first). With one
// baseline and one description setup this is exactly
//   M(c) = class-only   if P_only >= P_desc
//          description  if P_desc >  P_only.
// Classes whose baseline value is undefined stay on the baseline; undefined
// candidate values never win.
SelectionMap BuildSelectionMap(std::span<const SetupPerformance> performance,
                               std::string_view baseline_id);

// Scores with column k taken from the setup chosen for class k. Computed as
// one similarity pass over the composed text matrix, which yields the same
// values as the chosen setups' own columns.
engine::ScoreMatrix ApplySelection(const SelectionMap& map,
                                   std::span<const CandidateSetup> setups,
                                   const embstore::EmbeddingMatrix& audio,
                                   std::size_t threads = 1);

struct SetupScores {
  std::string setup_id;
  engine::ScoreMatrix scores;
};

// Column gather over precomputed per-setup score matrices; equal to
// ApplySelection on the same inputs.
engine::ScoreMatrix ComposeScores(const SelectionMap& map,
                                  std::span<const SetupScores> scores);

// {"baseline": ..., "choices": {class_id: setup_id}} in class order.
std::string ToJson(const SelectionMap& map,
                   const embstore::DatasetManifest& manifest);

}  // namespace zsaudio::adaptive

#endif  // ZSAUDIO_SELECTION_H_
