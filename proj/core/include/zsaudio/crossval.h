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

#ifndef ZSAUDIO_CROSSVAL_H_
#define ZSAUDIO_CROSSVAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zsaudio/evaluation.h"
#include "zsaudio/folds.h"
#include "zsaudio/metrics.h"
#include "zsaudio/selection.h"

namespace zsaudio::adaptive {

struct CrossvalOptions {
  std::string baseline_id;
  MetricKind metric = MetricKind::kAccuracy;
  std::size_t threads = 1;
};

struct FoldResult {
  int fold = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  SelectionMap map;
  double overall = 0.0;
  // Classes without a defined baseline performance on the training portion;
  // these fall back to the baseline.
  std::vector<int> defaulted_classes;
};

struct EvalReport {
  MetricKind kind = MetricKind::kAccuracy;
  std::string baseline_id;
  std::vector<std::string> setup_ids;  // selection priority order
  std::vector<FoldResult> folds;
  double mean = 0.0;  // unweighted mean of fold overall values
  // Out-of-fold composed scores (each sample scored with its test fold's
  // map) and the baseline, both evaluated over every sample.
  metrics::MetricReport pooled;
  metrics::MetricReport baseline;
  std::vector<metrics::ClassDelta> deltas;  // pooled vs baseline
};

// For every fold: derive the selection map from per-class performance of
// each uniform setup on the other folds, then score the composed setup on
// the held-out fold. `scores` are full per-setup score matrices indexed by
// audio row; the first setup with id options.baseline_id is the baseline and
// the remaining order is the tie-break priority.
EvalReport CrossvalEvaluate(std::span<const SetupScores> scores,
                            const embstore::DatasetManifest& manifest,
                            const FoldPlan& folds,
                            const CrossvalOptions& options);

// Convenience overload computing the per-setup scores first.
EvalReport CrossvalEvaluate(std::span<const CandidateSetup> setups,
                            const embstore::DatasetManifest& manifest,
                            const embstore::EmbeddingMatrix& audio,
                            const FoldPlan& folds,
                            const CrossvalOptions& options);

std::string ToJson(const EvalReport& report,
                   const embstore::DatasetManifest& manifest);

}  // namespace zsaudio::adaptive

#endif  // ZSAUDIO_CROSSVAL_H_
