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

#ifndef ZSAUDIO_EMBEDDING_H_
#define ZSAUDIO_EMBEDDING_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace zsaudio::embstore {

// Rows flagged as normalized must have a Euclidean norm within this distance
// of 1.
inline constexpr double kNormTolerance = 1e-4;

// Dense row-major float32 matrix of embeddings (one row per audio sample or
// per class prompt). Immutable once constructed; the constructor enforces
// that every value is finite and, when `normalized` is set, that every row
// has unit norm.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t dim, std::vector<float> values,
                  bool normalized = false);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t dim() const noexcept { return dim_; }
  bool normalized() const noexcept { return normalized_; }

  std::span<const float> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  std::span<const float> values() const noexcept { return values_; }

  // Bitwise equality of shape, flag and payload.
  friend bool operator==(const EmbeddingMatrix& a, const EmbeddingMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<float> values_;
  bool normalized_ = false;
};

// AEMB container layout (all little-endian):
//   "AEMB" | u16 version=1 | u16 reserved=0 | u64 rows | u32 dim |
//   u32 flags (bit 0 = normalized) | rows*dim float32, row-major.
inline constexpr std::size_t kAembHeaderSize = 24;
inline constexpr std::uint16_t kAembVersion = 1;
inline constexpr std::uint32_t kAembFlagNormalized = 1u;

std::vector<std::uint8_t> EncodeAemb(const EmbeddingMatrix& matrix);
EmbeddingMatrix DecodeAemb(std::span<const std::uint8_t> bytes,
                           const std::string& origin = "<memory>");

EmbeddingMatrix LoadEmbeddings(const std::filesystem::path& path);
void SaveEmbeddings(const EmbeddingMatrix& matrix,
                    const std::filesystem::path& path);

// Scales every row to unit Euclidean norm. Throws ValidationError naming the
// first zero-norm row.
EmbeddingMatrix L2Normalize(const EmbeddingMatrix& matrix);

}  // namespace zsaudio::embstore

#endif  // ZSAUDIO_EMBEDDING_H_
