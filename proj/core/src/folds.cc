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

#include "zsaudio/folds.h"

#include <limits>

#include "json.hpp"
#include "zsaudio/error.h"

namespace zsaudio::adaptive {

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ContractError("UniformBelow: zero bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

std::vector<std::size_t> FoldPlan::TestSamples(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::TrainSamples(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan MakeFolds(const embstore::DatasetManifest& manifest,
                   std::size_t n_folds, std::uint64_t seed) {
  const std::size_t n = manifest.num_samples();
  if (n_folds < 2) {
    throw ContractError("cross-validation needs at least 2 folds");
  }
  if (n < n_folds) {
    throw ContractError("cannot split " + std::to_string(n) +
                        " samples into " + std::to_string(n_folds) + " folds");
  }

  FoldPlan plan;
  plan.n_folds = n_folds;
  plan.seed = seed;
  plan.assignment.assign(n, -1);
  std::mt19937_64 rng(seed);

  if (manifest.task_type == embstore::TaskType::kMultiLabel) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    DeterministicShuffle(order, rng);
    const std::size_t base = n / n_folds;
    const std::size_t extra = n % n_folds;
    std::size_t pos = 0;
    for (std::size_t f = 0; f < n_folds; ++f) {
      const std::size_t size = base + (f < extra ? 1 : 0);
      for (std::size_t j = 0; j < size; ++j) {
        plan.assignment[order[pos++]] = static_cast<int>(f);
      }
    }
    return plan;
  }

  std::vector<std::vector<std::size_t>> by_class(manifest.num_classes());
  for (std::size_t i = 0; i < n; ++i) {
    by_class[manifest.samples[i].truth.front()].push_back(i);
  }
  std::size_t cursor = 0;
  auto deal = [&](std::vector<std::size_t>& members) {
    DeterministicShuffle(members, rng);
    for (std::size_t i : members) {
      plan.assignment[i] = static_cast<int>(cursor % n_folds);
      ++cursor;
    }
  };
  std::vector<std::size_t> remainder;
  for (auto& members : by_class) {
    if (members.size() >= n_folds) {
      deal(members);
    } else {
      remainder.insert(remainder.end(), members.begin(), members.end());
    }
  }
  deal(remainder);
  return plan;
}

std::string ToJson(const FoldPlan& plan,
                   const embstore::DatasetManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["n_folds"] = plan.n_folds;
  doc["seed"] = plan.seed;
  auto assignment = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < plan.assignment.size(); ++i) {
    assignment.push_back({{"sample_id", manifest.samples[i].sample_id},
                          {"fold", plan.assignment[i]}});
  }
  doc["assignment"] = std::move(assignment);
  return doc.dump(2) + "\n";
}

}  // namespace zsaudio::adaptive
