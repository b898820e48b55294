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

#ifndef ZSAUDIO_SCORING_H_
#define ZSAUDIO_SCORING_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zsaudio/embedding.h"

namespace zsaudio::engine {

using embstore::EmbeddingMatrix;

// N x K cosine similarities between audio rows and class text rows. Each
// column remembers which text set produced it, which matters once columns
// from different setups are composed.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
              std::vector<std::string> column_sources = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double at(std::size_t i, std::size_t k) const { return values_[i * cols_ + k]; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<std::string>& column_sources() const {
    return column_sources_;
  }

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
  std::vector<std::string> column_sources_;
};

struct SimilarityOptions {
  std::size_t threads = 1;
  std::string source;  // recorded as the provenance of every column
};

// Entry (i, k) is the dot product of audio row i and text row k, summed
// sequentially in double precision and clamped to [-1, 1]. Both inputs must
// carry the normalized flag and share a dimension.
ScoreMatrix Similarity(const EmbeddingMatrix& audio,
                       const EmbeddingMatrix& text,
                       const SimilarityOptions& options = {});

// Single-label decision: per row, the index of the highest score; ties go to
// the lowest class index. Throws on empty rows or non-finite scores.
std::vector<int> Classify(const ScoreMatrix& scores);

// Averages the per-class rows of several normalized text matrices and
// renormalizes each mean. A class whose rows are bitwise identical across
// all inputs keeps that row as is (the mean of equal unit vectors is the
// vector itself). Per component the inputs are summed in sorted order, so
// the result does not depend on input order.
EmbeddingMatrix EnsembleText(std::span<const EmbeddingMatrix* const> members);
EmbeddingMatrix EnsembleText(const std::vector<EmbeddingMatrix>& members);

}  // namespace zsaudio::engine

#endif  // ZSAUDIO_SCORING_H_
