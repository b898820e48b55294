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

#include "zsaudio/evaluation.h"

#include <algorithm>
#include <numeric>

#include "zsaudio/error.h"

namespace zsaudio::adaptive {
namespace {

std::vector<std::size_t> AllSamples(const embstore::DatasetManifest& manifest) {
  std::vector<std::size_t> all(manifest.num_samples());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

void RequireSingleLabel(const embstore::DatasetManifest& manifest) {
  if (manifest.task_type != embstore::TaskType::kSingleLabel) {
    throw ContractError("accuracy needs a single_label dataset");
  }
}

}  // namespace

MetricKind DefaultMetric(embstore::TaskType task) {
  return task == embstore::TaskType::kSingleLabel
             ? MetricKind::kAccuracy
             : MetricKind::kAveragePrecision;
}

engine::ScoreMatrix SelectSamples(const engine::ScoreMatrix& scores,
                                  const embstore::DatasetManifest& manifest,
                                  std::span<const std::size_t> samples) {
  const std::size_t k = scores.cols();
  std::vector<double> values;
  values.reserve(samples.size() * k);
  for (std::size_t i : samples) {
    if (i >= manifest.num_samples()) {
      throw ContractError("sample position " + std::to_string(i) +
                          " out of range");
    }
    const std::size_t row = manifest.samples[i].row;
    if (row >= scores.rows()) {
      throw ContractError("score matrix has no row " + std::to_string(row));
    }
    const auto r = scores.row(row);
    values.insert(values.end(), r.begin(), r.end());
  }
  return engine::ScoreMatrix(samples.size(), k, std::move(values),
                             scores.column_sources());
}

metrics::MetricReport EvaluateScores(const engine::ScoreMatrix& scores,
                                     const embstore::DatasetManifest& manifest,
                                     MetricKind kind,
                                     std::span<const std::size_t> samples,
                                     std::size_t threads) {
  std::vector<std::size_t> all;
  if (samples.empty()) {
    all = AllSamples(manifest);
    samples = all;
  }
  if (scores.cols() != manifest.num_classes()) {
    throw ContractError("score matrix has " + std::to_string(scores.cols()) +
                        " columns for " +
                        std::to_string(manifest.num_classes()) + " classes");
  }
  const engine::ScoreMatrix subset = SelectSamples(scores, manifest, samples);
  if (kind == MetricKind::kAccuracy) {
    RequireSingleLabel(manifest);
    std::vector<int> truth;
    truth.reserve(samples.size());
    for (std::size_t i : samples) truth.push_back(manifest.samples[i].truth.front());
    return metrics::Accuracy(engine::Classify(subset), truth,
                             manifest.num_classes());
  }
  std::vector<std::vector<int>> truth;
  truth.reserve(samples.size());
  for (std::size_t i : samples) truth.push_back(manifest.samples[i].truth);
  return metrics::MeanAveragePrecision(subset, truth, threads);
}

std::vector<std::optional<double>> PerClassPerf(
    const engine::ScoreMatrix& scores,
    const embstore::DatasetManifest& manifest,
    std::span<const std::size_t> samples, MetricKind kind) {
  if (samples.empty()) throw ContractError("per-class performance: empty subset");
  const std::size_t k = manifest.num_classes();
  if (scores.cols() != k) {
    throw ContractError("score matrix has " + std::to_string(scores.cols()) +
                        " columns for " + std::to_string(k) + " classes");
  }
  const engine::ScoreMatrix subset = SelectSamples(scores, manifest, samples);
  std::vector<std::optional<double>> perf(k);

  if (kind == MetricKind::kAccuracy) {
    RequireSingleLabel(manifest);
    const std::vector<int> predicted = engine::Classify(subset);
    std::vector<std::size_t> support(k, 0), hits(k, 0);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const int t = manifest.samples[samples[j]].truth.front();
      ++support[t];
      if (predicted[j] == t) ++hits[t];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (support[c] > 0) {
        perf[c] = static_cast<double>(hits[c]) / static_cast<double>(support[c]);
      }
    }
    return perf;
  }

  const std::size_t n = samples.size();
  std::vector<double> column(n);
  std::vector<std::uint8_t> relevant(n);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      column[j] = subset.at(j, c);
      const auto& truth = manifest.samples[samples[j]].truth;
      relevant[j] = std::binary_search(truth.begin(), truth.end(),
                                       static_cast<int>(c));
    }
    perf[c] = metrics::AveragePrecision(column, relevant);
  }
  return perf;
}

}  // namespace zsaudio::adaptive
