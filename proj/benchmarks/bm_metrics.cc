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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zsaudio/metrics.h"
#include "zsaudio/scoring.h"

namespace {

// AudioSet-like eval slice: many samples, 527 classes, ~2 labels per clip.
void BM_MeanAveragePrecision(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t kClasses = 527;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::vector<double> values(n * kClasses);
  for (double& v : values) v = uniform(rng);
  std::vector<std::vector<int>> truth(n);
  for (auto& t : truth) {
    t = {static_cast<int>(rng() % kClasses)};
    const int extra = static_cast<int>(rng() % kClasses);
    if (extra > t[0]) t.push_back(extra);
  }
  const zsaudio::engine::ScoreMatrix scores(n, kClasses, values);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zsaudio::metrics::MeanAveragePrecision(scores, truth, state.range(1)));
  }
}
BENCHMARK(BM_MeanAveragePrecision)->Args({2000, 1})->Args({2000, 4});

void BM_Accuracy(benchmark::State& state) {
  std::mt19937_64 rng(6);
  std::vector<int> predicted(100000), truth(100000);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    predicted[i] = static_cast<int>(rng() % 50);
    truth[i] = static_cast<int>(rng() % 50);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(zsaudio::metrics::Accuracy(predicted, truth, 50));
  }
}
BENCHMARK(BM_Accuracy);

}  // namespace

BENCHMARK_MAIN();
