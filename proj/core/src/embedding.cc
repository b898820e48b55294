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

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string_view>

#include "zsaudio/error.h"

namespace zsaudio::embstore {
namespace {

double RowNorm(std::span<const float> row) {
  double sum = 0.0;
  for (float v : row) sum += static_cast<double>(v) * static_cast<double>(v);
  return std::sqrt(sum);
}

template <typename T>
void PutLe(std::vector<std::uint8_t>& out, T value) {
  static_assert(std::is_unsigned_v<T>);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename T>
T GetLe(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(static_cast<T>(bytes[offset + i]) << (8 * i));
  }
  return value;
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t dim,
                                 std::vector<float> values, bool normalized)
    : rows_(rows), dim_(dim), values_(std::move(values)),
      normalized_(normalized) {
  if (dim_ != 0 && rows_ > values_.max_size() / dim_) {
    throw ValidationError("embedding shape overflows: rows=" +
                          std::to_string(rows_) +
                          " dim=" + std::to_string(dim_));
  }
  if (values_.size() != rows_ * dim_) {
    throw ValidationError("embedding value count " +
                          std::to_string(values_.size()) + " != rows*dim " +
                          std::to_string(rows_ * dim_));
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!std::isfinite(values_[r * dim_ + c])) {
        throw ValidationError("non-finite embedding value at (" +
                              std::to_string(r) + ", " + std::to_string(c) +
                              ")");
      }
    }
  }
  if (normalized_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      const double norm = RowNorm(row(r));
      if (std::abs(norm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << "row " << r << " flagged normalized but has norm " << norm;
        throw ValidationError(msg.str());
      }
    }
  }
}

bool operator==(const EmbeddingMatrix& a, const EmbeddingMatrix& b) {
  if (a.rows_ != b.rows_ || a.dim_ != b.dim_ ||
      a.normalized_ != b.normalized_) {
    return false;
  }
  // memcmp, not float ==: the contract is bit identity.
  return a.values_.empty() ||
         std::memcmp(a.values_.data(), b.values_.data(),
                     a.values_.size() * sizeof(float)) == 0;
}

std::vector<std::uint8_t> EncodeAemb(const EmbeddingMatrix& matrix) {
  if (matrix.dim() > UINT32_MAX) {
    throw ContractError("embedding dim does not fit the AEMB u32 field");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kAembHeaderSize + matrix.values().size() * sizeof(float));
  for (char c : std::string_view("AEMB")) out.push_back(static_cast<std::uint8_t>(c));
  PutLe<std::uint16_t>(out, kAembVersion);
  PutLe<std::uint16_t>(out, 0);
  PutLe<std::uint64_t>(out, matrix.rows());
  PutLe<std::uint32_t>(out, static_cast<std::uint32_t>(matrix.dim()));
  PutLe<std::uint32_t>(out, matrix.normalized() ? kAembFlagNormalized : 0u);
  for (float v : matrix.values()) {
    PutLe<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
  }
  return out;
}

EmbeddingMatrix DecodeAemb(std::span<const std::uint8_t> bytes,
                           const std::string& origin) {
  if (bytes.size() < kAembHeaderSize) {
    throw ValidationError(origin + ": truncated AEMB header (" +
                          std::to_string(bytes.size()) + " bytes)");
  }
  if (std::memcmp(bytes.data(), "AEMB", 4) != 0) {
    throw ValidationError(origin + ": bad magic, not an AEMB file");
  }
  const auto version = GetLe<std::uint16_t>(bytes, 4);
  if (version != kAembVersion) {
    throw ValidationError(origin + ": unsupported AEMB version " +
                          std::to_string(version));
  }
  if (GetLe<std::uint16_t>(bytes, 6) != 0) {
    throw ValidationError(origin + ": reserved header field is not zero");
  }
  const auto rows = GetLe<std::uint64_t>(bytes, 8);
  const auto dim = GetLe<std::uint32_t>(bytes, 16);
  const auto flags = GetLe<std::uint32_t>(bytes, 20);
  if ((flags & ~kAembFlagNormalized) != 0) {
    throw ValidationError(origin + ": unknown AEMB flag bits set");
  }

  const std::size_t payload = bytes.size() - kAembHeaderSize;
  if (dim != 0 && rows > payload / sizeof(float) / dim) {
    throw ValidationError(origin + ": truncated payload, header declares " +
                          std::to_string(rows) + "x" + std::to_string(dim));
  }
  const std::size_t count = static_cast<std::size_t>(rows) * dim;
  if (payload != count * sizeof(float)) {
    throw ValidationError(origin + ": payload is " + std::to_string(payload) +
                          " bytes (trailing data), expected " +
                          std::to_string(count * sizeof(float)));
  }

  std::vector<float> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = std::bit_cast<float>(
        GetLe<std::uint32_t>(bytes, kAembHeaderSize + i * sizeof(float)));
  }
  try {
    return EmbeddingMatrix(static_cast<std::size_t>(rows), dim,
                           std::move(values),
                           (flags & kAembFlagNormalized) != 0);
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

EmbeddingMatrix LoadEmbeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return DecodeAemb(bytes, path.string());
}

void SaveEmbeddings(const EmbeddingMatrix& matrix,
                    const std::filesystem::path& path) {
  const auto bytes = EncodeAemb(matrix);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

EmbeddingMatrix L2Normalize(const EmbeddingMatrix& matrix) {
  std::vector<float> values(matrix.values().begin(), matrix.values().end());
  const std::size_t dim = matrix.dim();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const double norm = RowNorm(matrix.row(r));
    if (norm == 0.0) {
      throw ValidationError("cannot normalize zero-norm row " +
                            std::to_string(r));
    }
    for (std::size_t c = 0; c < dim; ++c) {
      values[r * dim + c] =
          static_cast<float>(static_cast<double>(values[r * dim + c]) / norm);
    }
  }
  return EmbeddingMatrix(matrix.rows(), dim, std::move(values), true);
}

}  // namespace zsaudio::embstore
