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

#include "cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zsaudio/crossval.h"
#include "zsaudio/error.h"
#include "zsaudio/evaluation.h"
#include "zsaudio/folds.h"
#include "zsaudio/prompt.h"
#include "zsaudio/scoring.h"
#include "zsaudio/selection.h"

#ifndef ZSAUDIO_DEFAULT_TEMPLATES
#define ZSAUDIO_DEFAULT_TEMPLATES ""
#endif

namespace zsaudio::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void WriteFile(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) {
    throw IoError("cannot create " + path.parent_path().string() + ": " +
                  ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string Fixed(double value, int digits = 4) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string DisplayLabel(const embstore::ClassEntry& entry) {
  return engine::FormatLabel(engine::SanitizeLabel(entry.raw_label),
                             embstore::PromptFormat::kUpper);
}

std::string PredictionsJsonl(const engine::ScoreMatrix& scores,
                             const embstore::DatasetManifest& manifest) {
  std::string out;
  const bool single = manifest.task_type == embstore::TaskType::kSingleLabel;
  const std::vector<int> predicted =
      single ? engine::Classify(scores) : std::vector<int>{};
  for (const embstore::SampleEntry& sample : manifest.samples) {
    ordered_json line;
    line["sample_id"] = sample.sample_id;
    if (single) {
      line["predicted"] = predicted[sample.row];
    } else {
      const auto row = scores.row(sample.row);
      line["scores"] = std::vector<double>(row.begin(), row.end());
    }
    out += line.dump();
    out += '\n';
  }
  return out;
}

// summary.md concatenates the per-command sections in a fixed order.
void WriteSummarySection(const fs::path& out_dir, const std::string& name,
                         const std::string& markdown) {
  WriteFile(out_dir / "sections" / (name + ".md"), markdown);
  std::string summary = "# zsaudio summary\n";
  for (const char* section : {"eval", "adaptive"}) {
    const fs::path path = out_dir / "sections" / (std::string(section) + ".md");
    std::ifstream in(path);
    if (!in) continue;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    summary += "\n" + buffer.str();
  }
  WriteFile(out_dir / "summary.md", summary);
}

engine::ScoreMatrix ScoreSetup(const Bundle& bundle,
                               const embstore::TextSet& text,
                               std::size_t threads) {
  engine::SimilarityOptions options;
  options.threads = threads;
  options.source = text.setup_id;
  return engine::Similarity(bundle.audio, text.embeddings, options);
}

void RequireValid(const Bundle& bundle, const ExperimentConfig& config) {
  embstore::BundleOptions options;
  options.require_normalized = config.strict;
  const auto report = embstore::ValidateBundle(bundle.manifest, bundle.audio,
                                               bundle.texts, options);
  if (report.ok()) return;
  std::string message = "invalid bundle:";
  for (const auto& v : report.violations) {
    message += "\n  " + v.subject + ": " + v.message;
  }
  throw ValidationError(message);
}

int ExitCodeFor(ErrorKind kind) { return static_cast<int>(kind); }

}  // namespace

Bundle LoadBundle(const ExperimentConfig& config) {
  CheckSetupIds(config);
  if (config.manifest.empty()) throw ValidationError("--manifest is required");
  if (config.audio.empty()) throw ValidationError("--audio is required");
  Bundle bundle;
  embstore::ManifestOptions options;
  options.strict = config.strict;
  bundle.manifest =
      embstore::LoadManifest(config.manifest, options, &bundle.warnings);
  bundle.audio = embstore::LoadEmbeddings(config.audio);
  for (const SetupConfig& s : config.setups) {
    if (s.path.empty()) {
      throw ValidationError("setup '" + s.id + "' has no embedding path");
    }
    bundle.texts.push_back({s.id, s.spec, embstore::LoadEmbeddings(s.path)});
  }
  return bundle;
}

engine::TemplateRegistry LoadTemplates(const ExperimentConfig& config) {
  fs::path path = config.templates;
  if (path.empty()) path = ZSAUDIO_DEFAULT_TEMPLATES;
  if (path.empty()) throw ValidationError("no template registry configured");
  return engine::TemplateRegistry::Load(path);
}

metrics::MetricKind ResolveMetric(MetricChoice choice,
                                  embstore::TaskType task) {
  switch (choice) {
    case MetricChoice::kAccuracy:
      return metrics::MetricKind::kAccuracy;
    case MetricChoice::kMap:
      return metrics::MetricKind::kAveragePrecision;
    case MetricChoice::kAuto:
      break;
  }
  return adaptive::DefaultMetric(task);
}

int CmdValidate(const ExperimentConfig& config, std::ostream& out) {
  const Bundle bundle = LoadBundle(config);
  for (const std::string& w : bundle.warnings) out << "warning: " << w << "\n";
  embstore::BundleOptions options;
  options.require_normalized = config.strict;
  const auto report = embstore::ValidateBundle(bundle.manifest, bundle.audio,
                                               bundle.texts, options);
  for (const auto& v : report.violations) {
    out << "violation: " << v.subject << ": " << v.message << "\n";
  }
  out << (report.ok() ? "ok" : "invalid") << ": "
      << bundle.manifest.num_samples() << " samples, "
      << bundle.manifest.num_classes() << " classes, " << bundle.texts.size()
      << " text sets, " << report.violations.size() << " violations\n";
  return report.ok() ? kExitOk : kExitValidation;
}

void CmdClassify(const ExperimentConfig& config, std::string_view setup_id,
                 std::ostream& log) {
  const Bundle bundle = LoadBundle(config);
  RequireValid(bundle, config);
  const auto it = std::find_if(
      bundle.texts.begin(), bundle.texts.end(),
      [&](const embstore::TextSet& t) { return t.setup_id == setup_id; });
  if (it == bundle.texts.end()) {
    throw ValidationError("unknown setup id '" + std::string(setup_id) + "'");
  }
  const engine::ScoreMatrix scores = ScoreSetup(bundle, *it, config.threads);
  const fs::path path =
      config.out / "predictions" / (std::string(setup_id) + ".jsonl");
  WriteFile(path, PredictionsJsonl(scores, bundle.manifest));
  log << "wrote " << path.string() << "\n";
}

void CmdEval(const ExperimentConfig& config, std::ostream& log) {
  const Bundle bundle = LoadBundle(config);
  RequireValid(bundle, config);
  if (bundle.texts.empty()) throw ValidationError("eval needs at least one --setup");
  const auto& manifest = bundle.manifest;
  const metrics::MetricKind kind = ResolveMetric(config.metric, manifest.task_type);

  struct Row {
    std::string id;
    std::string spec;
    double overall = 0.0;
    std::vector<std::string> tags;
    bool class_only = false;
    bool is_template = false;
    std::string template_text;
  };
  std::vector<Row> rows;

  std::optional<engine::TemplateRegistry> registry;
  const bool any_template = std::any_of(
      bundle.texts.begin(), bundle.texts.end(),
      [](const embstore::TextSet& t) { return t.spec.template_id.has_value(); });
  if (any_template) {
    try {
      registry = LoadTemplates(config);
    } catch (const Error&) {
      // Template texts only label the summary; evaluation does not need them.
    }
  }

  auto evaluate = [&](const std::string& id, const engine::ScoreMatrix& scores) {
    const metrics::MetricReport report =
        adaptive::EvaluateScores(scores, manifest, kind, {}, config.threads);
    WriteFile(config.out / "reports" / (id + ".json"), metrics::ToJson(report));
    WriteFile(config.out / "predictions" / (id + ".jsonl"),
              PredictionsJsonl(scores, manifest));
    return report.overall;
  };

  std::vector<const embstore::EmbeddingMatrix*> template_texts;
  for (const embstore::TextSet& text : bundle.texts) {
    Row row;
    row.id = text.setup_id;
    row.spec = embstore::ToString(text.spec);
    row.class_only = text.spec.is_class_only();
    row.is_template = text.spec.template_id.has_value();
    if (row.is_template) {
      template_texts.push_back(&text.embeddings);
      if (registry) {
        if (const auto* t = registry->Find(*text.spec.template_id)) {
          row.template_text = t->text;
        }
      }
    }
    row.overall = evaluate(text.setup_id, ScoreSetup(bundle, text, config.threads));
    rows.push_back(std::move(row));
  }

  if (!template_texts.empty()) {
    const embstore::TextSet ensemble{
        std::string(kEnsembleSetupId), embstore::PromptSpec{},
        engine::EnsembleText(std::span<const embstore::EmbeddingMatrix* const>(
            template_texts))};
    Row row;
    row.id = std::string(kEnsembleSetupId);
    row.spec = "ensemble of " + std::to_string(template_texts.size()) +
               " templates";
    row.tags.push_back("PT_Ensemble");
    row.overall = evaluate(row.id, ScoreSetup(bundle, ensemble, config.threads));
    rows.push_back(std::move(row));
  }

  // Rankings: descending score, ties keep config order.
  auto ranked = [&rows](auto predicate) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (predicate(rows[i])) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rows[a].overall > rows[b].overall;
    });
    return order;
  };
  const auto format_ranking = ranked([](const Row& r) { return r.class_only; });
  const auto template_ranking = ranked([](const Row& r) { return r.is_template; });
  if (!format_ranking.empty()) rows[format_ranking.front()].tags.push_back("CLS");
  if (!template_ranking.empty()) {
    rows[template_ranking.front()].tags.push_back("PT_Best");
  }
  for (Row& r : rows) {
    if (r.is_template && r.template_text == engine::kBaselineTemplate) {
      r.tags.push_back("PT_Baseline");
    }
  }

  const std::string metric_name(metrics::ToString(kind));
  ordered_json summary;
  summary["dataset_id"] = manifest.dataset_id;
  summary["kind"] = metric_name;
  auto setups = ordered_json::array();
  for (const Row& r : rows) {
    setups.push_back({{"id", r.id},
                      {"spec", r.spec},
                      {"overall", r.overall},
                      {"tags", r.tags}});
  }
  summary["setups"] = std::move(setups);
  auto ids = [&rows](const std::vector<std::size_t>& order) {
    std::vector<std::string> out;
    for (std::size_t i : order) out.push_back(rows[i].id);
    return out;
  };
  summary["format_ranking"] = ids(format_ranking);
  summary["template_ranking"] = ids(template_ranking);
  WriteFile(config.out / "summary.json", summary.dump(2) + "\n");

  std::ostringstream md;
  md << "## Zero-shot evaluation: " << manifest.dataset_id << " ("
     << metric_name << ")\n\n";
  md << "| Setup | Prompt | " << metric_name << " | Tags |\n";
  md << "|---|---|---|---|\n";
  for (const Row& r : rows) {
    std::string tags;
    for (const auto& t : r.tags) tags += (tags.empty() ? "" : ", ") + t;
    md << "| " << r.id << " | " << r.spec
       << (r.template_text.empty() ? "" : " (\"" + r.template_text + "\")")
       << " | " << Fixed(r.overall) << " | " << tags << " |\n";
  }
  if (!format_ranking.empty()) {
    md << "\n### Label format ranking\n\n";
    for (std::size_t i = 0; i < format_ranking.size(); ++i) {
      const Row& r = rows[format_ranking[i]];
      md << i + 1 << ". " << r.id << " (" << r.spec << ") " << Fixed(r.overall)
         << "\n";
    }
  }
  if (!template_ranking.empty()) {
    const Row& best = rows[template_ranking.front()];
    md << "\nBest template: " << best.id
       << (best.template_text.empty() ? "" : " \"" + best.template_text + "\"")
       << " " << Fixed(best.overall) << "\n";
  }
  WriteSummarySection(config.out, "eval", md.str());
  log << "evaluated " << rows.size() << " setups into " << config.out.string()
      << "\n";
}

void CmdAdaptive(const ExperimentConfig& config, std::ostream& log) {
  const Bundle bundle = LoadBundle(config);
  RequireValid(bundle, config);
  const auto& manifest = bundle.manifest;
  const metrics::MetricKind kind = ResolveMetric(config.metric, manifest.task_type);

  const embstore::TextSet* baseline = nullptr;
  for (const embstore::TextSet& t : bundle.texts) {
    if (config.baseline ? t.setup_id == *config.baseline : t.spec.is_class_only()) {
      baseline = &t;
      break;
    }
  }
  if (baseline == nullptr) {
    throw ContractError(config.baseline
                            ? "baseline setup '" + *config.baseline + "' not found"
                            : "adaptive selection needs a class-only setup");
  }
  if (!baseline->spec.is_class_only()) {
    throw ContractError("baseline setup '" + baseline->setup_id +
                        "' is not class-only");
  }

  std::vector<const embstore::TextSet*> descriptions;
  for (const embstore::TextSet& t : bundle.texts) {
    if (t.spec.description_variant) descriptions.push_back(&t);
  }
  if (descriptions.empty()) {
    throw ContractError("adaptive selection needs at least one description setup");
  }
  std::stable_sort(descriptions.begin(), descriptions.end(),
                   [](const embstore::TextSet* a, const embstore::TextSet* b) {
                     return *a->spec.description_variant <
                            *b->spec.description_variant;
                   });

  std::map<std::string, engine::ScoreMatrix> scores;
  scores.emplace(baseline->setup_id, ScoreSetup(bundle, *baseline, config.threads));
  for (const auto* d : descriptions) {
    scores.emplace(d->setup_id, ScoreSetup(bundle, *d, config.threads));
  }

  const adaptive::FoldPlan folds =
      adaptive::MakeFolds(manifest, config.folds, config.seed);
  const fs::path dir = config.out / "adaptive";
  WriteFile(dir / "folds.json", adaptive::ToJson(folds, manifest));

  adaptive::CrossvalOptions options;
  options.baseline_id = baseline->setup_id;
  options.metric = kind;
  options.threads = config.threads;

  auto run = [&](const std::vector<const embstore::TextSet*>& members) {
    std::vector<adaptive::SetupScores> candidates;
    candidates.push_back({baseline->setup_id, scores.at(baseline->setup_id)});
    for (const auto* m : members) {
      candidates.push_back({m->setup_id, scores.at(m->setup_id)});
    }
    return adaptive::CrossvalEvaluate(candidates, manifest, folds, options);
  };

  struct Run {
    std::string name;
    fs::path dir;
    adaptive::EvalReport report;
  };
  std::vector<Run> runs;
  const adaptive::EvalReport baseline_report = run({});
  if (descriptions.size() == 1) {
    runs.push_back({descriptions.front()->setup_id, dir, run(descriptions)});
  } else {
    for (const auto* d : descriptions) {
      runs.push_back({d->setup_id, dir / d->setup_id, run({d})});
    }
    runs.push_back({"cd_all", dir, run(descriptions)});
  }

  for (const Run& r : runs) {
    for (const adaptive::FoldResult& f : r.report.folds) {
      WriteFile(r.dir / ("fold" + std::to_string(f.fold) + ".map.json"),
                adaptive::ToJson(f.map, manifest));
    }
    WriteFile(r.dir / "report.json", adaptive::ToJson(r.report, manifest));
  }

  const std::string metric_name(metrics::ToString(kind));
  std::ostringstream md;
  md << "## Adaptive description selection: " << manifest.dataset_id << " ("
     << metric_name << ", " << folds.n_folds << " folds, seed " << folds.seed
     << ")\n\n";
  md << "| Run | Setups | Fold mean";
  for (std::size_t f = 0; f < folds.n_folds; ++f) md << " | Fold " << f;
  md << " |\n|---|---|---";
  for (std::size_t f = 0; f < folds.n_folds; ++f) md << "|---";
  md << "|\n";
  auto table_row = [&](const std::string& name, const adaptive::EvalReport& rep) {
    std::string members;
    for (const auto& id : rep.setup_ids) members += (members.empty() ? "" : ", ") + id;
    md << "| " << name << " | " << members << " | " << Fixed(rep.mean);
    for (const auto& f : rep.folds) md << " | " << Fixed(f.overall);
    md << " |\n";
  };
  table_row(baseline->setup_id + " (baseline)", baseline_report);
  for (const Run& r : runs) table_row(r.name, r.report);

  for (const Run& r : runs) {
    md << "\n### Top per-class improvements: " << r.name << " vs "
       << baseline->setup_id << "\n\n";
    const std::size_t top = std::min(config.top, r.report.deltas.size());
    for (std::size_t i = 0; i < top; ++i) {
      const auto& d = r.report.deltas[i];
      md << "- " << metrics::FormatDeltaRow(
                        DisplayLabel(manifest.classes[d.class_index]),
                        d.delta_points)
         << "\n";
    }
  }
  WriteSummarySection(config.out, "adaptive", md.str());
  log << "adaptive selection: " << runs.back().name << " fold mean "
      << Fixed(runs.back().report.mean) << " vs " << baseline->setup_id << " "
      << Fixed(baseline_report.mean) << "\n";
}

void CmdRender(const ExperimentConfig& config, bool grid, std::ostream& out) {
  CheckSetupIds(config);
  if (config.manifest.empty()) throw ValidationError("--manifest is required");
  embstore::ManifestOptions options;
  options.strict = config.strict;
  const embstore::DatasetManifest manifest =
      embstore::LoadManifest(config.manifest, options);

  std::vector<std::pair<std::string, embstore::PromptSpec>> setups;
  std::optional<engine::TemplateRegistry> registry;
  auto templates = [&]() -> const engine::TemplateRegistry& {
    if (!registry) registry = LoadTemplates(config);
    return *registry;
  };
  if (grid) {
    for (auto format : {embstore::PromptFormat::kLower,
                        embstore::PromptFormat::kLowerPeriod,
                        embstore::PromptFormat::kUpper,
                        embstore::PromptFormat::kUpperPeriod}) {
      setups.push_back({"cls_" + std::string(embstore::ToString(format)),
                        embstore::PromptSpec{format, {}, {}}});
    }
    for (const auto& t : templates().templates()) {
      setups.push_back({"pt_" + t.id,
                        embstore::PromptSpec{embstore::PromptFormat::kLower, t.id, {}}});
    }
    for (auto variant : embstore::kAllDescriptionVariants) {
      const bool everywhere = !manifest.classes.empty() &&
          std::all_of(manifest.classes.begin(), manifest.classes.end(),
                      [&](const auto& c) { return c.descriptions.contains(variant); });
      if (!everywhere) continue;
      setups.push_back({"cd_" + std::string(embstore::ToString(variant)),
                        embstore::PromptSpec{embstore::PromptFormat::kUpper, {}, variant}});
    }
  }
  for (const SetupConfig& s : config.setups) setups.push_back({s.id, s.spec});

  for (const auto& [id, spec] : setups) {
    const auto prompts = engine::RenderPrompts(
        manifest, spec, spec.template_id ? &templates() : nullptr);
    for (const auto& p : prompts) {
      ordered_json line;
      line["class_index"] = p.class_index;
      line["setup_id"] = id;
      line["text"] = p.text;
      line["spec"] = embstore::ToString(spec);
      out << line.dump() << "\n";
    }
  }
}

void CmdNormalize(const std::string& input, const std::string& output) {
  embstore::SaveEmbeddings(
      embstore::L2Normalize(embstore::LoadEmbeddings(input)), output);
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero-shot audio classification over precomputed embeddings"};
  app.require_subcommand(1);

  struct RawOptions {
    std::string config;
    std::string manifest;
    std::string audio;
    std::vector<std::string> setups;
    std::string metric = "auto";
    std::size_t folds = adaptive::kDefaultFolds;
    std::uint64_t seed = adaptive::kDefaultSeed;
    std::string out;
    bool strict = false;
    std::size_t threads = 1;
    std::string templates;
    std::string baseline;
    std::size_t top = 3;
    std::string setup_id;
    std::string prompts;
    bool grid = false;
    std::string input;
    std::string output;
  } raw;

  std::map<CLI::App*, std::vector<CLI::Option*>> flags;
  auto common = [&](CLI::App* sub, bool with_audio) {
    auto& f = flags[sub];
    f.push_back(sub->add_option("--config", raw.config, "JSON experiment config"));
    f.push_back(sub->add_option("--manifest", raw.manifest, "Dataset manifest (JSON)"));
    if (with_audio) {
      f.push_back(sub->add_option("--audio", raw.audio, "Audio embeddings (AEMB)"));
    }
    f.push_back(sub->add_option("--setup", raw.setups,
                                "<id>=<spec>:<path>, repeatable")
                    ->take_all());
    f.push_back(sub->add_flag("--strict", raw.strict,
                              "Reject unknown manifest keys, require normalized matrices"));
    f.push_back(sub->add_option("--templates", raw.templates,
                                "Prompt template registry"));
  };
  auto experiment = [&](CLI::App* sub) {
    common(sub, true);
    auto& f = flags[sub];
    f.push_back(sub->add_option("--metric", raw.metric, "auto, accuracy or map")
                    ->check(CLI::IsMember({"auto", "accuracy", "map"})));
    f.push_back(sub->add_option("--folds", raw.folds, "Cross-validation folds"));
    f.push_back(sub->add_option("--seed", raw.seed, "Fold assignment seed"));
    f.push_back(sub->add_option("--out", raw.out, "Output directory"));
    f.push_back(sub->add_option("--threads", raw.threads, "Worker threads"));
    f.push_back(sub->add_option("--baseline", raw.baseline,
                                "Class-only setup used as baseline"));
    f.push_back(sub->add_option("--top", raw.top, "Delta rows per adaptive run"));
  };

  auto* validate = app.add_subcommand("validate", "Check a bundle for consistency");
  common(validate, true);
  auto* classify = app.add_subcommand("classify", "Write predictions for one setup");
  experiment(classify);
  classify->add_option("--setup-id", raw.setup_id, "Setup to classify")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate every setup plus the template ensemble");
  experiment(eval);
  auto* adaptive_cmd = app.add_subcommand("adaptive", "Cross-validated description selection");
  experiment(adaptive_cmd);
  auto* render = app.add_subcommand("render", "Emit prompt texts as JSON Lines");
  common(render, false);
  render->add_flag("--grid", raw.grid, "Add the full format/template/description grid");
  render->add_option("--prompts", raw.prompts, "Output file (default stdout)");
  auto* normalize = app.add_subcommand("normalize", "L2-normalize an AEMB file");
  normalize->add_option("input", raw.input)->required();
  normalize->add_option("output", raw.output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (normalize->parsed()) {
      CmdNormalize(raw.input, raw.output);
      return kExitOk;
    }
    CLI::App* sub = app.get_subcommands().front();
    auto given = [&](const std::string& name) {
      for (CLI::Option* o : flags[sub]) {
        if (o->check_name(name)) return o->count() > 0;
      }
      return false;
    };

    ExperimentConfig config;
    if (!raw.config.empty()) config = LoadConfigFile(raw.config);
    if (given("--manifest")) config.manifest = raw.manifest;
    if (given("--audio")) config.audio = raw.audio;
    if (given("--templates")) config.templates = raw.templates;
    if (given("--strict")) config.strict = raw.strict;
    if (given("--out")) config.out = raw.out;
    if (given("--folds")) config.folds = raw.folds;
    if (given("--seed")) config.seed = raw.seed;
    if (given("--threads")) config.threads = raw.threads;
    if (given("--top")) config.top = raw.top;
    if (given("--baseline")) config.baseline = raw.baseline;
    if (given("--metric")) config.metric = *ParseMetricChoice(raw.metric);
    for (const std::string& s : raw.setups) {
      config.setups.push_back(ParseSetupFlag(s, sub == render));
    }

    if (sub == validate) return CmdValidate(config, out);
    if (sub == classify) {
      CmdClassify(config, raw.setup_id, err);
    } else if (sub == eval) {
      CmdEval(config, err);
    } else if (sub == adaptive_cmd) {
      CmdAdaptive(config, err);
    } else if (sub == render) {
      if (raw.prompts.empty()) {
        CmdRender(config, raw.grid, out);
      } else {
        std::ostringstream buffer;
        CmdRender(config, raw.grid, buffer);
        WriteFile(raw.prompts, buffer.str());
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitContract;
  }
}

}  // namespace zsaudio::cli
