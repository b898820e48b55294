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

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "zsaudio/error.h"
#include "zsaudio/evaluation.h"

namespace zsaudio::adaptive {
namespace {

using metrics::MetricKind;

std::vector<std::vector<double>> Rows(const engine::ScoreMatrix& m) {
  std::vector<std::vector<double>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].assign(m.row(i).begin(), m.row(i).end());
  }
  return out;
}

std::vector<SetupScores> ConfusableScores(const testing::ConfusableFixture& f) {
  return {{"class_only", engine::Similarity(f.audio, f.class_only)},
          {"cd_base", engine::Similarity(f.audio, f.description)}};
}

TEST(CrossvalTest, SingleSetupMatchesPlainEvaluation) {
  const auto f = testing::MakeConfusableFixture(5);
  const std::vector<SetupScores> scores = {
      {"class_only", engine::Similarity(f.audio, f.class_only)}};
  const FoldPlan plan = MakeFolds(f.manifest, 5, 42);
  const EvalReport r = CrossvalEvaluate(
      scores, f.manifest, plan, {"class_only", MetricKind::kAccuracy, 1});
  for (const FoldResult& fold : r.folds) {
    EXPECT_EQ(fold.map.choices, std::vector<std::string>(3, "class_only"));
    EXPECT_EQ(fold.overall,
              EvaluateScores(scores[0].scores, f.manifest, MetricKind::kAccuracy,
                             plan.TestSamples(fold.fold))
                  .overall);
  }
  EXPECT_EQ(r.pooled.overall, r.baseline.overall);
  for (const auto& d : r.deltas) EXPECT_EQ(d.delta_points, 0.0);
}

TEST(CrossvalTest, IdenticalSetupsKeepBaseline) {
  const auto f = testing::MakeConfusableFixture(6);
  const auto s = engine::Similarity(f.audio, f.class_only);
  const std::vector<SetupScores> scores = {{"class_only", s}, {"cd_base", s}};
  const EvalReport r =
      CrossvalEvaluate(scores, f.manifest, MakeFolds(f.manifest, 5, 1),
                       {"class_only", MetricKind::kAccuracy, 1});
  for (const FoldResult& fold : r.folds) {
    EXPECT_EQ(fold.map.choices, std::vector<std::string>(3, "class_only"));
  }
}

// Independent re-derivation of the per-fold procedure for accuracy.
TEST(CrossvalTest, MatchesReferenceProcedure) {
  const auto f = testing::MakeConfusableFixture(7, 12);
  const auto scores = ConfusableScores(f);
  const FoldPlan plan = MakeFolds(f.manifest, 4, 9);
  const EvalReport r = CrossvalEvaluate(
      scores, f.manifest, plan, {"class_only", MetricKind::kAccuracy, 1});

  const auto a = Rows(scores[0].scores);
  const auto b = Rows(scores[1].scores);
  const std::size_t k = 3;
  double fold_sum = 0.0;
  for (int fold = 0; fold < 4; ++fold) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < f.manifest.num_samples(); ++i) {
      (plan.assignment[i] == fold ? test : train).push_back(i);
    }
    auto recall = [&](const std::vector<std::vector<double>>& m, std::size_t c) {
      int support = 0, hit = 0;
      for (std::size_t i : train) {
        if (f.manifest.samples[i].truth[0] != static_cast<int>(c)) continue;
        ++support;
        hit += testing::oracle::Argmax(m[f.manifest.samples[i].row]) ==
               static_cast<int>(c);
      }
      return static_cast<double>(hit) / support;
    };
    std::vector<bool> use_b(k);
    for (std::size_t c = 0; c < k; ++c) use_b[c] = recall(b, c) > recall(a, c);
    std::vector<int> predicted, truth;
    for (std::size_t i : test) {
      const std::size_t row = f.manifest.samples[i].row;
      std::vector<double> composed(k);
      for (std::size_t c = 0; c < k; ++c) composed[c] = use_b[c] ? b[row][c] : a[row][c];
      predicted.push_back(testing::oracle::Argmax(composed));
      truth.push_back(f.manifest.samples[i].truth[0]);
    }
    const double expected = testing::oracle::Accuracy(predicted, truth);
    EXPECT_NEAR(r.folds[fold].overall, expected, 1e-12) << "fold " << fold;
    for (std::size_t c = 0; c < k; ++c) {
      EXPECT_EQ(r.folds[fold].map.choices[c], use_b[c] ? "cd_base" : "class_only");
    }
    fold_sum += r.folds[fold].overall;
  }
  EXPECT_NEAR(r.mean, fold_sum / 4, 1e-12);
}

TEST(CrossvalTest, HelpfulDescriptionsImproveAccuracy) {
  const auto f = testing::MakeConfusableFixture(8);
  const EvalReport r =
      CrossvalEvaluate(ConfusableScores(f), f.manifest,
                       MakeFolds(f.manifest, 5, 42),
                       {"class_only", MetricKind::kAccuracy, 1});
  EXPECT_GE(r.mean, r.baseline.overall + 0.10);
  EXPECT_GT(r.pooled.overall, r.baseline.overall);
  for (std::size_t i = 1; i < r.deltas.size(); ++i) {
    EXPECT_GE(r.deltas[i - 1].delta_points, r.deltas[i].delta_points);
  }
}

TEST(CrossvalTest, AveragePrecisionAndDefaultedClasses) {
  auto manifest = testing::SingleLabelManifest({"a", "b", "c"}, 4);
  manifest.task_type = embstore::TaskType::kMultiLabel;
  // Class 2 has a single positive, so some training folds lack it.
  for (auto& s : manifest.samples) {
    if (s.truth[0] == 2) s.truth = {0};
  }
  manifest.samples[11].truth = {2};
  std::mt19937_64 rng(3);
  const auto audio = testing::RandomMatrix(12, 5, rng);
  const std::vector<SetupScores> scores = {
      {"class_only", engine::Similarity(audio, testing::RandomMatrix(3, 5, rng))},
      {"cd_base", engine::Similarity(audio, testing::RandomMatrix(3, 5, rng))}};
  const FoldPlan plan = MakeFolds(manifest, 3, 42);
  const EvalReport r = CrossvalEvaluate(
      scores, manifest, plan, {"class_only", MetricKind::kAveragePrecision, 1});
  const int held_out = plan.assignment[11];
  EXPECT_EQ(r.folds[held_out].defaulted_classes, std::vector<int>{2});
  EXPECT_EQ(r.folds[held_out].map.choices[2], "class_only");
  for (const FoldResult& fold : r.folds) {
    if (fold.fold != held_out) EXPECT_TRUE(fold.defaulted_classes.empty());
  }
}

TEST(CrossvalTest, ThreadCountDoesNotChangeResults) {
  const auto f = testing::MakeConfusableFixture(9);
  const auto plan = MakeFolds(f.manifest, 5, 42);
  const auto one = CrossvalEvaluate(ConfusableScores(f), f.manifest, plan,
                                    {"class_only", MetricKind::kAccuracy, 1});
  const auto four = CrossvalEvaluate(ConfusableScores(f), f.manifest, plan,
                                     {"class_only", MetricKind::kAccuracy, 4});
  EXPECT_EQ(ToJson(one, f.manifest), ToJson(four, f.manifest));
}

TEST(CrossvalTest, CandidateOverloadAgrees) {
  const auto f = testing::MakeConfusableFixture(10);
  const auto plan = MakeFolds(f.manifest, 5, 42);
  const std::vector<CandidateSetup> setups = {
      {"class_only", {}, f.class_only}, {"cd_base", {}, f.description}};
  const CrossvalOptions options{"class_only", MetricKind::kAccuracy, 1};
  EXPECT_EQ(
      ToJson(CrossvalEvaluate(setups, f.manifest, f.audio, plan, options), f.manifest),
      ToJson(CrossvalEvaluate(ConfusableScores(f), f.manifest, plan, options),
             f.manifest));
}

TEST(CrossvalTest, Errors) {
  const auto f = testing::MakeConfusableFixture(11);
  const auto plan = MakeFolds(f.manifest, 5, 42);
  EXPECT_THROW(CrossvalEvaluate(std::span<const SetupScores>{}, f.manifest, plan,
                                {"class_only", MetricKind::kAccuracy, 1}),
               ContractError);
  EXPECT_THROW(CrossvalEvaluate(ConfusableScores(f), f.manifest, plan,
                                {"missing", MetricKind::kAccuracy, 1}),
               ContractError);
  FoldPlan short_plan = plan;
  short_plan.assignment.pop_back();
  EXPECT_THROW(CrossvalEvaluate(ConfusableScores(f), f.manifest, short_plan,
                                {"class_only", MetricKind::kAccuracy, 1}),
               ContractError);
}

TEST(CrossvalTest, JsonReport) {
  const auto f = testing::MakeConfusableFixture(12);
  const auto r = CrossvalEvaluate(ConfusableScores(f), f.manifest,
                                  MakeFolds(f.manifest, 5, 42),
                                  {"class_only", MetricKind::kAccuracy, 1});
  const auto doc = nlohmann::json::parse(ToJson(r, f.manifest));
  EXPECT_EQ(doc["kind"], "accuracy");
  EXPECT_EQ(doc["folds"].size(), 5u);
  EXPECT_EQ(doc["fold_mean"], r.mean);
  EXPECT_TRUE(doc["folds"][0]["choices"].contains("c0"));
}

}  // namespace
}  // namespace zsaudio::adaptive
