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

#include "zsaudio/crossval.h"

#include <numeric>

#include "json.hpp"
#include "zsaudio/error.h"
#include "zsaudio/parallel.h"

namespace zsaudio::adaptive {

EvalReport CrossvalEvaluate(std::span<const SetupScores> scores,
                            const embstore::DatasetManifest& manifest,
                            const FoldPlan& folds,
                            const CrossvalOptions& options) {
  if (scores.empty()) throw ContractError("cross-validation needs a setup");
  if (folds.assignment.size() != manifest.num_samples()) {
    throw ContractError("fold plan does not cover the manifest samples");
  }
  const SetupScores* baseline = nullptr;
  for (const SetupScores& s : scores) {
    if (s.setup_id == options.baseline_id) {
      baseline = &s;
      break;
    }
  }
  if (baseline == nullptr) {
    throw ContractError("baseline setup '" + options.baseline_id +
                        "' not among the candidates");
  }

  EvalReport report;
  report.kind = options.metric;
  report.baseline_id = options.baseline_id;
  for (const SetupScores& s : scores) report.setup_ids.push_back(s.setup_id);

  const std::size_t n_folds = folds.n_folds;
  report.folds.resize(n_folds);
  // Folds are independent; each writes only its own slot.
  ParallelFor(n_folds, options.threads, [&](std::size_t f) {
    FoldResult& result = report.folds[f];
    result.fold = static_cast<int>(f);
    const auto train = folds.TrainSamples(result.fold);
    const auto test = folds.TestSamples(result.fold);
    if (train.empty() || test.empty()) {
      throw ContractError("fold " + std::to_string(f) + " is degenerate");
    }
    result.n_train = train.size();
    result.n_test = test.size();

    std::vector<SetupPerformance> performance;
    performance.reserve(scores.size());
    for (const SetupScores& s : scores) {
      performance.push_back(
          {s.setup_id, PerClassPerf(s.scores, manifest, train, options.metric)});
    }
    result.map = BuildSelectionMap(performance, options.baseline_id);
    for (const SetupPerformance& p : performance) {
      if (p.setup_id != options.baseline_id) continue;
      for (std::size_t c = 0; c < p.per_class.size(); ++c) {
        if (!p.per_class[c]) result.defaulted_classes.push_back(static_cast<int>(c));
      }
      break;
    }
    const engine::ScoreMatrix composed = ComposeScores(result.map, scores);
    result.overall =
        EvaluateScores(composed, manifest, options.metric, test).overall;
  });

  double sum = 0.0;
  for (const FoldResult& f : report.folds) sum += f.overall;
  report.mean = sum / static_cast<double>(n_folds);

  // Out-of-fold composition: sample i is scored with the map of its fold.
  const std::size_t n = baseline->scores.rows();
  const std::size_t k = baseline->scores.cols();
  std::vector<double> pooled(n * k);
  std::vector<engine::ScoreMatrix> composed_by_fold;
  composed_by_fold.reserve(n_folds);
  for (const FoldResult& f : report.folds) {
    composed_by_fold.push_back(ComposeScores(f.map, scores));
  }
  for (std::size_t i = 0; i < manifest.num_samples(); ++i) {
    const std::size_t row = manifest.samples[i].row;
    const auto src = composed_by_fold[folds.assignment[i]].row(row);
    std::copy(src.begin(), src.end(), pooled.begin() + row * k);
  }
  const engine::ScoreMatrix pooled_scores(n, k, std::move(pooled));
  report.pooled = EvaluateScores(pooled_scores, manifest, options.metric, {},
                                 options.threads);
  report.baseline = EvaluateScores(baseline->scores, manifest, options.metric,
                                   {}, options.threads);
  report.deltas = metrics::PerClassTable(report.baseline, report.pooled);
  return report;
}

EvalReport CrossvalEvaluate(std::span<const CandidateSetup> setups,
                            const embstore::DatasetManifest& manifest,
                            const embstore::EmbeddingMatrix& audio,
                            const FoldPlan& folds,
                            const CrossvalOptions& options) {
  std::vector<SetupScores> scores;
  scores.reserve(setups.size());
  for (const CandidateSetup& s : setups) {
    scores.push_back({s.setup_id,
                      engine::Similarity(audio, s.embeddings,
                                         {.threads = options.threads,
                                          .source = s.setup_id})});
  }
  return CrossvalEvaluate(scores, manifest, folds, options);
}

std::string ToJson(const EvalReport& report,
                   const embstore::DatasetManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["kind"] = metrics::ToString(report.kind);
  doc["baseline"] = report.baseline_id;
  doc["setups"] = report.setup_ids;
  doc["fold_mean"] = report.mean;
  auto folds = nlohmann::ordered_json::array();
  for (const FoldResult& f : report.folds) {
    nlohmann::ordered_json fold;
    fold["fold"] = f.fold;
    fold["n_train"] = f.n_train;
    fold["n_test"] = f.n_test;
    fold["overall"] = f.overall;
    fold["defaulted_classes"] = f.defaulted_classes;
    nlohmann::ordered_json choices = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < f.map.choices.size(); ++c) {
      choices[manifest.classes[c].class_id] = f.map.choices[c];
    }
    fold["choices"] = std::move(choices);
    folds.push_back(std::move(fold));
  }
  doc["folds"] = std::move(folds);
  doc["pooled_overall"] = report.pooled.overall;
  doc["baseline_overall"] = report.baseline.overall;
  auto deltas = nlohmann::ordered_json::array();
  for (const metrics::ClassDelta& d : report.deltas) {
    deltas.push_back({{"class_index", d.class_index},
                      {"class_id", manifest.classes[d.class_index].class_id},
                      {"delta_points", d.delta_points}});
  }
  doc["deltas"] = std::move(deltas);
  return doc.dump(2) + "\n";
}

}  // namespace zsaudio::adaptive
