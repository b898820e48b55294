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

#include "zsaudio/embedding.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "support/fixtures.h"
#include "zsaudio/error.h"

namespace zsaudio::embstore {
namespace {

using testing::MatrixFromRows;
using testing::RandomMatrix;
using testing::TempDir;

TEST(EmbeddingMatrixTest, RejectsShapeMismatch) {
  EXPECT_THROW(EmbeddingMatrix(2, 3, std::vector<float>(5)), ValidationError);
}

TEST(EmbeddingMatrixTest, RejectsUnitFlagOnNonUnitRow) {
  EXPECT_THROW(EmbeddingMatrix(1, 2, {3.0f, 4.0f}, true), ValidationError);
  EXPECT_NO_THROW(EmbeddingMatrix(1, 2, {0.6f, 0.8f}, true));
}

TEST(AembTest, LoadsSingleRow) {
  TempDir dir;
  SaveEmbeddings(EmbeddingMatrix(1, 4, {1, 0, 0, 0}, true), dir / "m.aemb");
  const EmbeddingMatrix m = LoadEmbeddings(dir / "m.aemb");
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_TRUE(m.normalized());
  EXPECT_EQ(m.row(0)[0], 1.0f);
}

TEST(AembTest, EmptyMatrixIsHeaderOnly) {
  const auto bytes = EncodeAemb(EmbeddingMatrix(0, 16, {}));
  ASSERT_EQ(bytes.size(), kAembHeaderSize);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "AEMB");
  const EmbeddingMatrix back = DecodeAemb(bytes);
  EXPECT_EQ(back.rows(), 0u);
  EXPECT_EQ(back.dim(), 16u);
}

TEST(AembTest, HeaderLayoutIsLittleEndian) {
  const auto bytes = EncodeAemb(EmbeddingMatrix(2, 2, {1, 0, 0, 1}, true));
  ASSERT_EQ(bytes.size(), kAembHeaderSize + 16);
  const std::vector<std::uint8_t> header(bytes.begin(),
                                         bytes.begin() + kAembHeaderSize);
  const std::vector<std::uint8_t> expected = {
      'A', 'E', 'M', 'B',             // magic
      1,   0,                         // version
      0,   0,                         // reserved
      2,   0,   0,   0, 0, 0, 0, 0,   // rows
      2,   0,   0,   0,               // dim
      1,   0,   0,   0};              // flags
  EXPECT_EQ(header, expected);
  // 1.0f == 0x3f800000
  const std::vector<std::uint8_t> payload(bytes.begin() + kAembHeaderSize,
                                          bytes.end());
  const std::vector<std::uint8_t> expected_payload = {
      0, 0, 0x80, 0x3f, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x80, 0x3f};
  EXPECT_EQ(payload, expected_payload);
}

TEST(AembTest, SaveIsDeterministic) {
  std::mt19937_64 rng(3);
  const EmbeddingMatrix m = RandomMatrix(5, 9, rng);
  TempDir dir;
  SaveEmbeddings(m, dir / "a.aemb");
  SaveEmbeddings(m, dir / "b.aemb");
  EXPECT_EQ(testing::ReadFile(dir / "a.aemb"), testing::ReadFile(dir / "b.aemb"));
}

TEST(AembTest, RoundTripIsBitIdentical) {
  std::mt19937_64 rng(7);
  TempDir dir;
  for (int trial = 0; trial < 20; ++trial) {
    const EmbeddingMatrix m = RandomMatrix(7, 13, rng, trial % 2 == 0);
    SaveEmbeddings(m, dir / "m.aemb");
    EXPECT_EQ(LoadEmbeddings(dir / "m.aemb"), m);
  }
}

TEST(AembTest, RoundTripKeepsSpecialFiniteValues) {
  const std::vector<float> values = {
      -0.0f, std::numeric_limits<float>::denorm_min(),
      std::numeric_limits<float>::max(), std::numeric_limits<float>::lowest()};
  const EmbeddingMatrix m(2, 2, values);
  const EmbeddingMatrix back = DecodeAemb(EncodeAemb(m));
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(std::bit_cast<std::uint32_t>(back.values()[i]),
              std::bit_cast<std::uint32_t>(values[i]));
  }
}

TEST(AembTest, RejectsBadMagic) {
  auto bytes = EncodeAemb(EmbeddingMatrix(1, 1, {1.0f}));
  bytes[0] = 'X';
  EXPECT_THROW(DecodeAemb(bytes), ValidationError);
}

TEST(AembTest, RejectsTruncatedPayloadAndTrailingBytes) {
  auto bytes = EncodeAemb(EmbeddingMatrix(2, 3, std::vector<float>(6, 0.5f)));
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_THROW(DecodeAemb(truncated), ValidationError);
  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_THROW(DecodeAemb(trailing), ValidationError);
  EXPECT_THROW(DecodeAemb(std::span(bytes).first(10)), ValidationError);
}

TEST(AembTest, RejectsUnknownVersionAndFlags) {
  auto bytes = EncodeAemb(EmbeddingMatrix(1, 1, {1.0f}));
  auto version = bytes;
  version[4] = 2;
  EXPECT_THROW(DecodeAemb(version), ValidationError);
  auto flags = bytes;
  flags[20] = 0x02;
  EXPECT_THROW(DecodeAemb(flags), ValidationError);
}

TEST(AembTest, NonFiniteValueReportsRowAndColumn) {
  std::vector<float> values(5 * 4, 0.25f);
  auto bytes = EncodeAemb(EmbeddingMatrix(5, 4, values));
  const float nan = std::numeric_limits<float>::quiet_NaN();
  const auto bits = std::bit_cast<std::uint32_t>(nan);
  const std::size_t offset = kAembHeaderSize + (3 * 4 + 2) * sizeof(float);
  for (int i = 0; i < 4; ++i) bytes[offset + i] = (bits >> (8 * i)) & 0xff;
  try {
    DecodeAemb(bytes);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(3, 2)"), std::string::npos)
        << e.what();
  }
}

TEST(AembTest, MissingFileIsIoError) {
  EXPECT_THROW(LoadEmbeddings("/nonexistent/zsaudio.aemb"), IoError);
}

TEST(L2NormalizeTest, ThreeFourFiveTriangle) {
  const EmbeddingMatrix m = L2Normalize(EmbeddingMatrix(1, 2, {3.0f, 4.0f}));
  EXPECT_TRUE(m.normalized());
  EXPECT_NEAR(m.row(0)[0], 0.6, 1e-7);
  EXPECT_NEAR(m.row(0)[1], 0.8, 1e-7);
}

TEST(L2NormalizeTest, UnitRowUnchanged) {
  const EmbeddingMatrix m = L2Normalize(EmbeddingMatrix(1, 2, {1.0f, 0.0f}));
  EXPECT_EQ(m.row(0)[0], 1.0f);
  EXPECT_EQ(m.row(0)[1], 0.0f);
}

TEST(L2NormalizeTest, ZeroRowIsAnErrorNamingTheRow) {
  try {
    L2Normalize(EmbeddingMatrix(3, 2, {1, 1, 0, 0, 2, 2}));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
}

TEST(L2NormalizeTest, UnitNormAndIdempotentOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const EmbeddingMatrix raw = RandomMatrix(4, 1 + trial % 64, rng, false);
    const EmbeddingMatrix once = L2Normalize(raw);
    const EmbeddingMatrix twice = L2Normalize(once);
    for (std::size_t r = 0; r < once.rows(); ++r) {
      double norm = 0.0;
      for (float v : once.row(r)) norm += double(v) * v;
      EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-6);
      for (std::size_t c = 0; c < once.dim(); ++c) {
        EXPECT_NEAR(once.row(r)[c], twice.row(r)[c], 1e-6);
        // Direction preserved: same sign as the input.
        EXPECT_EQ(std::signbit(once.row(r)[c]), std::signbit(raw.row(r)[c]));
      }
    }
  }
}

}  // namespace
}  // namespace zsaudio::embstore
