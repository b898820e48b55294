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

#include "zsaudio/bundle.h"

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.h"

namespace zsaudio::embstore {
namespace {

using testing::RandomMatrix;

class BundleTest : public ::testing::Test {
 protected:
  BundleTest() : manifest_(testing::SingleLabelManifest({"a", "b", "c"}, 2)) {}

  TextSet Text(std::string id, std::size_t rows, std::size_t dim) {
    return {std::move(id), PromptSpec{}, RandomMatrix(rows, dim, rng_)};
  }

  std::mt19937_64 rng_{5};
  DatasetManifest manifest_;
};

TEST_F(BundleTest, ConsistentBundleHasNoViolations) {
  const auto audio = RandomMatrix(6, 8, rng_);
  EXPECT_TRUE(ValidateBundle(manifest_, audio, {Text("cls", 3, 8)}).ok());
}

TEST_F(BundleTest, MissingClassRowIsNamed) {
  const auto audio = RandomMatrix(6, 8, rng_);
  const auto report = ValidateBundle(manifest_, audio, {Text("short", 2, 8)});
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations[0].subject.find("short"), std::string::npos);
  EXPECT_NE(report.violations[0].message.find("2 rows"), std::string::npos);
}

TEST_F(BundleTest, DimMismatchCitesBothDims) {
  const auto audio = RandomMatrix(6, 512, rng_);
  const auto report = ValidateBundle(manifest_, audio, {Text("wide", 3, 1024)});
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations[0].message.find("audio=512"), std::string::npos);
  EXPECT_NE(report.violations[0].message.find("text=1024"), std::string::npos);
}

TEST_F(BundleTest, ListsEveryViolation) {
  const auto audio = RandomMatrix(5, 8, rng_);
  TextSet desc = Text("desc", 3, 8);
  desc.spec.description_variant = DescriptionVariant::kContext;
  const auto report = ValidateBundle(
      manifest_, audio, {Text("x", 2, 4), Text("x", 3, 8), desc});
  // audio rows, x rows, x dim, duplicate id, three missing descriptions.
  EXPECT_EQ(report.violations.size(), 7u);
}

TEST_F(BundleTest, StrictModeRequiresNormalizedMatrices) {
  const auto audio = RandomMatrix(6, 8, rng_, false);
  const std::vector<TextSet> texts = {Text("cls", 3, 8)};
  EXPECT_TRUE(ValidateBundle(manifest_, audio, texts).ok());
  const auto strict =
      ValidateBundle(manifest_, audio, texts, {.require_normalized = true});
  ASSERT_EQ(strict.violations.size(), 1u);
  EXPECT_EQ(strict.violations[0].subject, "audio");
}

}  // namespace
}  // namespace zsaudio::embstore
