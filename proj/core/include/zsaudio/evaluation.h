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

#ifndef ZSAUDIO_EVALUATION_H_
#define ZSAUDIO_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zsaudio/manifest.h"
#include "zsaudio/metrics.h"
#include "zsaudio/scoring.h"

namespace zsaudio::adaptive {

using metrics::MetricKind;

// accuracy for single-label datasets, mAP for multi-label ones.
MetricKind DefaultMetric(embstore::TaskType task);

// Rows of `scores` (indexed by audio row) reordered to the given manifest
// sample positions.
engine::ScoreMatrix SelectSamples(const engine::ScoreMatrix& scores,
                                  const embstore::DatasetManifest& manifest,
                                  std::span<const std::size_t> samples);

// Scores `scores` against manifest ground truth on the given sample
// positions (all samples when `samples` is empty). Accuracy requires a
// single-label manifest.
metrics::MetricReport EvaluateScores(
    const engine::ScoreMatrix& scores,
    const embstore::DatasetManifest& manifest, MetricKind kind,
    std::span<const std::size_t> samples = {}, std::size_t threads = 1);

// Per-class performance on a sample subset: recall (accuracy) or AP (mAP).
// nullopt marks a class that is undefined on the subset: no samples of the
// class for recall, no positives for AP.
std::vector<std::optional<double>> PerClassPerf(
    const engine::ScoreMatrix& scores,
    const embstore::DatasetManifest& manifest,
    std::span<const std::size_t> samples, MetricKind kind);

}  // namespace zsaudio::adaptive

#endif  // ZSAUDIO_EVALUATION_H_
