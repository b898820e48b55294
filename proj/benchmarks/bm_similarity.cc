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

#include <cmath>
#include <random>
#include <vector>

#include "zsaudio/embedding.h"
#include "zsaudio/scoring.h"

namespace {

using zsaudio::embstore::EmbeddingMatrix;

EmbeddingMatrix Random(std::size_t rows, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> normal;
  std::vector<float> values(rows * dim);
  for (float& v : values) v = normal(rng);
  return zsaudio::embstore::L2Normalize(EmbeddingMatrix(rows, dim, values, false));
}

// ESC-50 sized: 2000 clips, 50 classes, 512-d embeddings.
void BM_Similarity(benchmark::State& state) {
  const auto audio = Random(static_cast<std::size_t>(state.range(0)), 512, 1);
  const auto text = Random(50, 512, 2);
  zsaudio::engine::SimilarityOptions options;
  options.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zsaudio::engine::Similarity(audio, text, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 50);
}
BENCHMARK(BM_Similarity)->Args({2000, 1})->Args({2000, 4})->Args({8000, 1});

void BM_Classify(benchmark::State& state) {
  const auto scores = zsaudio::engine::Similarity(Random(2000, 512, 3), Random(50, 512, 4));
  for (auto _ : state) benchmark::DoNotOptimize(zsaudio::engine::Classify(scores));
}
BENCHMARK(BM_Classify);

void BM_EnsembleText(benchmark::State& state) {
  std::vector<EmbeddingMatrix> members;
  for (int m = 0; m < state.range(0); ++m) members.push_back(Random(527, 512, 10 + m));
  for (auto _ : state) benchmark::DoNotOptimize(zsaudio::engine::EnsembleText(members));
}
BENCHMARK(BM_EnsembleText)->Arg(11)->Arg(33);

}  // namespace

BENCHMARK_MAIN();
