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

#include "zsaudio/embedding.h"

namespace {

using zsaudio::embstore::EmbeddingMatrix;

EmbeddingMatrix Random(std::size_t rows, std::size_t dim) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<float> uniform(-1.0f, 1.0f);
  std::vector<float> values(rows * dim);
  for (float& v : values) v = uniform(rng);
  return EmbeddingMatrix(rows, dim, std::move(values), false);
}

void BM_EncodeAemb(benchmark::State& state) {
  const auto m = Random(static_cast<std::size_t>(state.range(0)), 512);
  for (auto _ : state) benchmark::DoNotOptimize(zsaudio::embstore::EncodeAemb(m));
  state.SetBytesProcessed(state.iterations() * state.range(0) * 512 * 4);
}
BENCHMARK(BM_EncodeAemb)->Arg(2000)->Arg(20000);

void BM_DecodeAemb(benchmark::State& state) {
  const auto bytes =
      zsaudio::embstore::EncodeAemb(Random(static_cast<std::size_t>(state.range(0)), 512));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zsaudio::embstore::DecodeAemb(bytes, "bench"));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0) * 512 * 4);
}
BENCHMARK(BM_DecodeAemb)->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
