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

#include "support/fixtures.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cli/commands.h"

namespace zsaudio::testing {

TempDir::TempDir() {
  std::string pattern =
      (std::filesystem::temp_directory_path() / "zsaudio-test-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed");
  }
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

embstore::EmbeddingMatrix MatrixFromRows(
    const std::vector<std::vector<double>>& rows, bool normalize) {
  const std::size_t dim = rows.empty() ? 0 : rows.front().size();
  std::vector<float> values;
  for (const auto& row : rows) {
    double norm = 0.0;
    for (double v : row) norm += v * v;
    norm = normalize ? std::sqrt(norm) : 1.0;
    for (double v : row) values.push_back(static_cast<float>(v / norm));
  }
  return embstore::EmbeddingMatrix(rows.size(), dim, std::move(values),
                                   normalize);
}

embstore::EmbeddingMatrix RandomMatrix(std::size_t rows, std::size_t dim,
                                       std::mt19937_64& rng, bool normalize) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> data(rows, std::vector<double>(dim));
  for (auto& row : data) {
    for (double& v : row) v = gauss(rng);
  }
  return MatrixFromRows(data, normalize);
}

std::vector<double> ToyEncode(std::string_view text, std::size_t dim) {
  const std::string padded = "^" + std::string(text) + "$";
  std::vector<double> v(dim, 0.0);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t j = i; j < i + 3; ++j) {
      h ^= static_cast<unsigned char>(padded[j]);
      h *= 1099511628211ull;
    }
    v[h % dim] += ((h >> 40) & 1) ? 1.0 : -1.0;
  }
  return v;
}

embstore::DatasetManifest SingleLabelManifest(
    const std::vector<std::string>& labels, std::size_t per_class,
    std::string dataset_id) {
  embstore::DatasetManifest manifest;
  manifest.dataset_id = std::move(dataset_id);
  manifest.task_type = embstore::TaskType::kSingleLabel;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    manifest.classes.push_back({"c" + std::to_string(k), labels[k], {}});
  }
  std::size_t row = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    for (std::size_t j = 0; j < per_class; ++j) {
      manifest.samples.push_back(
          {"s" + std::to_string(row), {static_cast<int>(k)}, row});
      ++row;
    }
  }
  return manifest;
}

ConfusableFixture MakeConfusableFixture(std::uint64_t seed,
                                        std::size_t per_class) {
  constexpr std::size_t kDim = 8;
  auto basis = [](std::size_t i) {
    std::vector<double> v(kDim, 0.0);
    v[i] = 1.0;
    return v;
  };
  auto mix = [](std::vector<double> a, double wa, const std::vector<double>& b,
                double wb) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = wa * a[i] + wb * b[i];
    return a;
  };

  ConfusableFixture f;
  f.manifest = SingleLabelManifest({"bat", "crow", "toot"}, per_class,
                                   "confusable");
  f.manifest.classes[0].descriptions[embstore::DescriptionVariant::kBase] =
      "a flying mammal emitting high-pitched squeaks";
  f.manifest.classes[1].descriptions[embstore::DescriptionVariant::kBase] =
      "a harsh cawing bird call";
  f.manifest.classes[2].descriptions[embstore::DescriptionVariant::kBase] =
      "a short, high-pitched signal sound";

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.15);
  std::vector<std::vector<double>> audio;
  for (const auto& sample : f.manifest.samples) {
    std::vector<double> v = basis(static_cast<std::size_t>(sample.truth[0]));
    for (double& x : v) x += noise(rng);
    audio.push_back(std::move(v));
  }
  f.audio = MatrixFromRows(audio);
  f.class_only = MatrixFromRows({basis(0), mix(basis(1), -1.0, basis(3), 1.0),
                                 basis(2)});
  f.description = MatrixFromRows({mix(basis(0), 1.0, basis(4), 0.1), basis(1),
                                  mix(basis(2), -1.0, basis(3), 1.0)});
  return f;
}

std::vector<std::string> WriteBundleFiles(
    const std::filesystem::path& dir, const embstore::DatasetManifest& manifest,
    const embstore::EmbeddingMatrix& audio,
    const std::vector<embstore::TextSet>& texts) {
  std::filesystem::create_directories(dir);
  WriteText(dir / "manifest.json", embstore::SerializeManifest(manifest));
  embstore::SaveEmbeddings(audio, dir / "audio.aemb");
  std::vector<std::string> flags;
  for (const auto& t : texts) {
    const auto path = dir / (t.setup_id + ".aemb");
    embstore::SaveEmbeddings(t.embeddings, path);
    flags.push_back(t.setup_id + "=" + embstore::ToString(t.spec) + ":" +
                    path.string());
  }
  return flags;
}

CliResult RunCli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"zsaudio"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult result;
  result.exit_code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace zsaudio::testing
