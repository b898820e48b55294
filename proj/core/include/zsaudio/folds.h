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

#ifndef ZSAUDIO_FOLDS_H_
#define ZSAUDIO_FOLDS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zsaudio/manifest.h"

namespace zsaudio::adaptive {

inline constexpr std::size_t kDefaultFolds = 5;
inline constexpr std::uint64_t kDefaultSeed = 42;

// Fold index per manifest sample position (not per audio row).
struct FoldPlan {
  std::size_t n_folds = kDefaultFolds;
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> assignment;

  std::vector<std::size_t> TestSamples(int fold) const;
  std::vector<std::size_t> TrainSamples(int fold) const;
};

// Seeded, platform-independent fold assignment.
//
// single_label: samples of every class holding at least n_folds members are
// shuffled and dealt round-robin; the members of smaller classes are pooled,
// shuffled and dealt last. A single cursor runs through all deals, so fold
// sizes differ by at most one and every fold holds floor/ceil(count/n_folds)
// of each large class.
// multi_label: one seeded shuffle, then contiguous split.
//
// Throws ContractError if n_folds < 2 or the manifest has fewer samples than
// folds.
FoldPlan MakeFolds(const embstore::DatasetManifest& manifest,
                   std::size_t n_folds, std::uint64_t seed);

// {"n_folds", "seed", "assignment": [{"sample_id", "fold"}]}
std::string ToJson(const FoldPlan& plan,
                   const embstore::DatasetManifest& manifest);

// Uniform integer in [0, bound) from raw engine output. Unlike
// std::uniform_int_distribution the result is identical on every standard
// library.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates shuffle driven by UniformBelow.
template <typename T>
void DeterministicShuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(UniformBelow(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace zsaudio::adaptive

#endif  // ZSAUDIO_FOLDS_H_
