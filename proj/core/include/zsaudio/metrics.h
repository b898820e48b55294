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

#ifndef ZSAUDIO_METRICS_H_
#define ZSAUDIO_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsaudio/scoring.h"

namespace zsaudio::metrics {

enum class MetricKind { kAccuracy, kAveragePrecision };

// Name used in serialized reports: "accuracy" / "map".
std::string_view ToString(MetricKind kind);

struct PerClassPerformance {
  int class_index = 0;
  double value = 0.0;  // recall for accuracy reports, AP for mAP reports
};

struct MetricReport {
  MetricKind kind = MetricKind::kAccuracy;
  double overall = 0.0;
  std::vector<PerClassPerformance> per_class;  // ascending class index
  std::vector<int> skipped_classes;  // no support: no samples / no positives
  std::size_t n_samples = 0;
};

// overall = correct / N; per_class holds recall for every class that has at
// least one sample. Classes in [0, num_classes) without samples are skipped.
MetricReport Accuracy(std::span<const int> predictions,
                      std::span<const int> truth, std::size_t num_classes);

// Non-interpolated AP: rank samples by descending score (ties by ascending
// sample index) and average precision@r over the ranks r of the positives.
// `relevant` holds 0/1 flags. Returns nullopt when there is no positive.
std::optional<double> AveragePrecision(std::span<const double> scores,
                                       std::span<const std::uint8_t> relevant);

// Unweighted mean of per-class AP over classes with at least one positive.
// Throws ValidationError when no class has a positive.
MetricReport MeanAveragePrecision(const engine::ScoreMatrix& scores,
                                  const std::vector<std::vector<int>>& truth,
                                  std::size_t threads = 1);

struct ClassDelta {
  int class_index = 0;
  double delta_points = 0.0;  // 100 * (b - a)
};

// Per-class change from `before` to `after`, sorted by descending delta with
// ties kept in class order. Both reports must cover the same classes with
// the same metric kind.
std::vector<ClassDelta> PerClassTable(const MetricReport& before,
                                      const MetricReport& after);

// "<label> +40.12" style row.
std::string FormatDeltaRow(std::string_view label, double delta_points);

// {"overall", "kind", "n_samples", "per_class": [{"class_index", "value"}],
//  "skipped_classes"}
std::string ToJson(const MetricReport& report);

}  // namespace zsaudio::metrics

#endif  // ZSAUDIO_METRICS_H_
