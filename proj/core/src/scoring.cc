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

#include "zsaudio/scoring.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "zsaudio/error.h"
#include "zsaudio/parallel.h"

namespace zsaudio::engine {

ScoreMatrix::ScoreMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> values,
                         std::vector<std::string> column_sources)
    : rows_(rows), cols_(cols), values_(std::move(values)),
      column_sources_(std::move(column_sources)) {
  if (values_.size() != rows_ * cols_) {
    throw ContractError("score matrix value count does not match shape");
  }
  if (!column_sources_.empty() && column_sources_.size() != cols_) {
    throw ContractError("score matrix provenance must cover every column");
  }
}

ScoreMatrix Similarity(const EmbeddingMatrix& audio,
                       const EmbeddingMatrix& text,
                       const SimilarityOptions& options) {
  if (audio.dim() != text.dim()) {
    throw ContractError("similarity dim mismatch: audio=" +
                        std::to_string(audio.dim()) +
                        " text=" + std::to_string(text.dim()));
  }
  if (!audio.normalized() || !text.normalized()) {
    throw ContractError(std::string("similarity needs normalized inputs (") +
                        (audio.normalized() ? "text" : "audio") +
                        " is not)");
  }
  const std::size_t n = audio.rows();
  const std::size_t k = text.rows();
  const std::size_t dim = audio.dim();
  std::vector<double> values(n * k);
  ParallelFor(n, options.threads, [&](std::size_t i) {
    const auto a = audio.row(i);
    for (std::size_t c = 0; c < k; ++c) {
      const auto t = text.row(c);
      double dot = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        dot += static_cast<double>(a[d]) * static_cast<double>(t[d]);
      }
      values[i * k + c] = std::clamp(dot, -1.0, 1.0);
    }
  });
  std::vector<std::string> sources;
  if (!options.source.empty()) sources.assign(k, options.source);
  return ScoreMatrix(n, k, std::move(values), std::move(sources));
}

std::vector<int> Classify(const ScoreMatrix& scores) {
  if (scores.cols() == 0) throw ContractError("cannot classify an empty score row");
  std::vector<int> predictions(scores.rows());
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    const auto row = scores.row(i);
    std::size_t best = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw ContractError("non-finite score at (" + std::to_string(i) +
                            ", " + std::to_string(c) + ")");
      }
      if (row[c] > row[best]) best = c;
    }
    predictions[i] = static_cast<int>(best);
  }
  return predictions;
}

EmbeddingMatrix EnsembleText(std::span<const EmbeddingMatrix* const> members) {
  if (members.empty()) throw ContractError("cannot ensemble an empty list");
  const std::size_t rows = members.front()->rows();
  const std::size_t dim = members.front()->dim();
  for (const EmbeddingMatrix* m : members) {
    if (m->rows() != rows || m->dim() != dim) {
      throw ContractError("ensemble members differ in shape");
    }
    if (!m->normalized()) {
      throw ContractError("ensemble members must be normalized");
    }
  }

  std::vector<float> out(rows * dim);
  std::vector<float> column(members.size());
  std::vector<double> mean(dim);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto first = members.front()->row(r);
    const bool identical = std::all_of(
        members.begin() + 1, members.end(), [&](const EmbeddingMatrix* m) {
          return dim == 0 || std::memcmp(m->row(r).data(), first.data(),
                                         dim * sizeof(float)) == 0;
        });
    if (identical) {
      std::copy(first.begin(), first.end(), out.begin() + r * dim);
      continue;
    }
    double norm_sq = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      for (std::size_t m = 0; m < members.size(); ++m) {
        column[m] = members[m]->row(r)[d];
      }
      std::sort(column.begin(), column.end());
      double sum = 0.0;
      for (float v : column) sum += v;
      mean[d] = sum / static_cast<double>(members.size());
      norm_sq += mean[d] * mean[d];
    }
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) {
      throw ValidationError("ensemble mean of class row " + std::to_string(r) +
                            " has zero norm");
    }
    for (std::size_t d = 0; d < dim; ++d) {
      out[r * dim + d] = static_cast<float>(mean[d] / norm);
    }
  }
  return EmbeddingMatrix(rows, dim, std::move(out), true);
}

EmbeddingMatrix EnsembleText(const std::vector<EmbeddingMatrix>& members) {
  std::vector<const EmbeddingMatrix*> pointers;
  pointers.reserve(members.size());
  for (const auto& m : members) pointers.push_back(&m);
  return EnsembleText(std::span<const EmbeddingMatrix* const>(pointers));
}

}  // namespace zsaudio::engine
