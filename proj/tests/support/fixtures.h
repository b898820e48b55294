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

#ifndef ZSAUDIO_TESTS_SUPPORT_FIXTURES_H_
#define ZSAUDIO_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zsaudio/bundle.h"
#include "zsaudio/embedding.h"
#include "zsaudio/manifest.h"

namespace zsaudio::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

std::string ReadFile(const std::filesystem::path& path);
void WriteText(const std::filesystem::path& path, const std::string& text);

// Builds a matrix from nested rows; `normalize` rescales each row first.
embstore::EmbeddingMatrix MatrixFromRows(
    const std::vector<std::vector<double>>& rows, bool normalize = true);

// Gaussian entries; normalized rows when requested.
embstore::EmbeddingMatrix RandomMatrix(std::size_t rows, std::size_t dim,
                                       std::mt19937_64& rng,
                                       bool normalize = true);

// Deterministic bag-of-character-trigrams text embedding (signed feature
// hashing). Any change to the text, including case or punctuation, moves the
// vector.
std::vector<double> ToyEncode(std::string_view text, std::size_t dim);

// Manifest with `labels` as classes and `per_class` samples per class in
// class-major order, rows 0..N-1.
embstore::DatasetManifest SingleLabelManifest(
    const std::vector<std::string>& labels, std::size_t per_class,
    std::string dataset_id = "fixture");

// Three-class dataset in which the class-only prompt of class 1 points away
// from its audio and the description prompt of class 2 points away from its
// audio, while every other prompt is aligned. Composing class-only for
// classes 0 and 2 with the description for class 1 separates everything.
struct ConfusableFixture {
  embstore::DatasetManifest manifest;
  embstore::EmbeddingMatrix audio;
  embstore::EmbeddingMatrix class_only;
  embstore::EmbeddingMatrix description;
};
ConfusableFixture MakeConfusableFixture(std::uint64_t seed,
                                        std::size_t per_class = 30);

// Writes manifest.json, audio.aemb and <id>.aemb for each text set into
// `dir`; returns the --setup flag strings.
std::vector<std::string> WriteBundleFiles(
    const std::filesystem::path& dir, const embstore::DatasetManifest& manifest,
    const embstore::EmbeddingMatrix& audio,
    const std::vector<embstore::TextSet>& texts);

// Runs the CLI entry point in-process.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};
CliResult RunCli(const std::vector<std::string>& args);

}  // namespace zsaudio::testing

#endif  // ZSAUDIO_TESTS_SUPPORT_FIXTURES_H_
