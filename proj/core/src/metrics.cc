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

#include "zsaudio/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "zsaudio/error.h"
#include "zsaudio/parallel.h"

namespace zsaudio::metrics {

std::string_view ToString(MetricKind kind) {
  return kind == MetricKind::kAccuracy ? "accuracy" : "map";
}

MetricReport Accuracy(std::span<const int> predictions,
                      std::span<const int> truth, std::size_t num_classes) {
  if (predictions.size() != truth.size()) {
    throw ContractError("accuracy: " + std::to_string(predictions.size()) +
                        " predictions for " + std::to_string(truth.size()) +
                        " samples");
  }
  if (truth.empty()) throw ContractError("accuracy: no samples");

  std::vector<std::size_t> support(num_classes, 0);
  std::vector<std::size_t> hits(num_classes, 0);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i];
    if (t < 0 || static_cast<std::size_t>(t) >= num_classes) {
      throw ContractError("accuracy: truth index " + std::to_string(t) +
                          " out of range");
    }
    const int p = predictions[i];
    if (p < 0 || static_cast<std::size_t>(p) >= num_classes) {
      throw ContractError("accuracy: predicted index " + std::to_string(p) +
                          " out of range");
    }
    ++support[t];
    if (p == t) {
      ++hits[t];
      ++correct;
    }
  }

  MetricReport report;
  report.kind = MetricKind::kAccuracy;
  report.n_samples = truth.size();
  report.overall =
      static_cast<double>(correct) / static_cast<double>(truth.size());
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (support[c] == 0) {
      report.skipped_classes.push_back(static_cast<int>(c));
      continue;
    }
    report.per_class.push_back(
        {static_cast<int>(c),
         static_cast<double>(hits[c]) / static_cast<double>(support[c])});
  }
  return report;
}

std::optional<double> AveragePrecision(std::span<const double> scores,
                                       std::span<const std::uint8_t> relevant) {
  if (scores.size() != relevant.size()) {
    throw ContractError("average precision: scores and relevance differ in "
                        "length");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (std::isnan(scores[i])) {
      throw ContractError("average precision: NaN score at sample " +
                          std::to_string(i));
    }
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  std::size_t positives = 0;
  double precision_sum = 0.0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (!relevant[order[rank]]) continue;
    ++positives;
    precision_sum +=
        static_cast<double>(positives) / static_cast<double>(rank + 1);
  }
  if (positives == 0) return std::nullopt;
  return precision_sum / static_cast<double>(positives);
}

MetricReport MeanAveragePrecision(const engine::ScoreMatrix& scores,
                                  const std::vector<std::vector<int>>& truth,
                                  std::size_t threads) {
  const std::size_t n = scores.rows();
  const std::size_t k = scores.cols();
  if (truth.size() != n) {
    throw ContractError("mAP: truth covers " + std::to_string(truth.size()) +
                        " samples, scores " + std::to_string(n));
  }
  if (k == 0) throw ContractError("mAP: no classes");

  // Column-major relevance so each class gets a contiguous span.
  std::vector<std::uint8_t> relevance(n * k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c : truth[i]) {
      if (c < 0 || static_cast<std::size_t>(c) >= k) {
        throw ContractError("mAP: truth index " + std::to_string(c) +
                            " out of range");
      }
      relevance[static_cast<std::size_t>(c) * n + i] = 1;
    }
  }

  std::vector<std::optional<double>> ap(k);
  ParallelFor(k, threads, [&](std::size_t c) {
    std::vector<double> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = scores.at(i, c);
    ap[c] = AveragePrecision(
        column, std::span<const std::uint8_t>(relevance.data() + c * n, n));
  });

  MetricReport report;
  report.kind = MetricKind::kAveragePrecision;
  report.n_samples = n;
  double sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (!ap[c]) {
      report.skipped_classes.push_back(static_cast<int>(c));
      continue;
    }
    report.per_class.push_back({static_cast<int>(c), *ap[c]});
    sum += *ap[c];
  }
  if (report.per_class.empty()) {
    throw ValidationError("mAP: no class has a positive sample");
  }
  report.overall = sum / static_cast<double>(report.per_class.size());
  return report;
}

std::vector<ClassDelta> PerClassTable(const MetricReport& before,
                                      const MetricReport& after) {
  if (before.kind != after.kind) {
    throw ContractError("per-class table: reports use different metrics");
  }
  if (before.per_class.size() != after.per_class.size()) {
    throw ContractError("per-class table: reports cover different classes");
  }
  std::vector<ClassDelta> rows;
  rows.reserve(before.per_class.size());
  for (std::size_t i = 0; i < before.per_class.size(); ++i) {
    if (before.per_class[i].class_index != after.per_class[i].class_index) {
      throw ContractError("per-class table: reports cover different classes");
    }
    rows.push_back({before.per_class[i].class_index,
                    100.0 * (after.per_class[i].value -
                             before.per_class[i].value)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ClassDelta& a, const ClassDelta& b) {
                     return a.delta_points > b.delta_points;
                   });
  return rows;
}

std::string FormatDeltaRow(std::string_view label, double delta_points) {
  char number[32];
  std::snprintf(number, sizeof(number), "%+.2f", delta_points);
  return std::string(label) + " " + number;
}

std::string ToJson(const MetricReport& report) {
  nlohmann::ordered_json doc;
  doc["overall"] = report.overall;
  doc["kind"] = ToString(report.kind);
  doc["n_samples"] = report.n_samples;
  auto per_class = nlohmann::ordered_json::array();
  for (const auto& p : report.per_class) {
    per_class.push_back({{"class_index", p.class_index}, {"value", p.value}});
  }
  doc["per_class"] = std::move(per_class);
  doc["skipped_classes"] = report.skipped_classes;
  return doc.dump(2) + "\n";
}

}  // namespace zsaudio::metrics
