// Copyright 2026 The srbench Authors
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

#include "cli.h"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/bench/dataset.h"
#include "srbench/bench/harness.h"
#include "srbench/bench/records.h"
#include "srbench/bench/report.h"
#include "srbench/error.h"
#include "srbench/metrics/criteria.h"
#include "srbench/metrics/evaluator.h"
#include "srbench/metrics/niqe.h"
#include "srbench/png_io.h"
#include "srbench/runtime/model_config.h"
#include "srbench/synthetic.h"

namespace srbench::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kDefaultNiqeModel = "synthetic-pristine.json";

// Thrown for mistakes in how the tool was invoked rather than in the work.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

fs::path presets_dir(const fs::path& data) { return data / "presets"; }
fs::path niqe_dir(const fs::path& data) { return data / "data" / "niqe"; }

std::optional<metrics::NiqePristineModel> load_niqe(const std::string& explicit_path,
                                                    const fs::path& data, bool required) {
  if (!explicit_path.empty()) return metrics::load_pristine_model(explicit_path);
  const fs::path fallback = niqe_dir(data) / kDefaultNiqeModel;
  if (fs::exists(fallback)) return metrics::load_pristine_model(fallback);
  if (required) {
    throw Error(ErrorKind::kConfig,
                fmt::format("no NIQE pristine model: pass --niqe-model or install {}", fallback.string()));
  }
  return std::nullopt;
}

std::vector<runtime::ModelConfig> resolve_models(const std::vector<std::string>& specs) {
  std::vector<runtime::ModelConfig> models;
  std::vector<std::string> patterns;
  auto flush = [&] {
    if (patterns.empty()) return;
    for (auto& m : runtime::load_model_configs(patterns)) models.push_back(std::move(m));
    patterns.clear();
  };
  for (const auto& spec : specs) {
    if (spec.starts_with("builtin:")) {
      flush();
      const auto kind = runtime::parse_runner_kind("builtin-" + spec.substr(8));
      if (!kind) throw UsageError(fmt::format("unknown builtin model '{}' (nearest, bilinear, bicubic)", spec));
      models.push_back(runtime::builtin_model(*kind));
    } else {
      patterns.push_back(spec);
    }
  }
  flush();
  std::map<std::string, std::string> seen;
  for (const auto& m : models) {
    if (!seen.emplace(m.name, m.source.string()).second) {
      throw Error(ErrorKind::kConfig, fmt::format("duplicate model name '{}'", m.name));
    }
  }
  return models;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", path.string()));
}

std::string utc_timestamp() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)));
}

std::string make_run_id() {
  std::random_device rd;
  return fmt::format("{:08x}{:08x}", rd(), rd());
}

// ---------------------------------------------------------------- prepare

struct PrepareArgs {
  std::string hr_dir;
  std::string out_dir;
  std::vector<int> scales;
  std::string name;
  bool force = false;
};

int cmd_prepare(const PrepareArgs& a, bool json, std::ostream& out) {
  bench::PrepareOptions opts;
  opts.name = a.name;
  opts.force = a.force;
  const auto result = bench::prepare_dataset(a.hr_dir, a.out_dir, a.scales, opts);
  if (json) {
    ordered_json j;
    j["dataset"] = result.dataset.name;
    j["root"] = result.dataset.root.string();
    j["images"] = result.dataset.hr_stems.size();
    j["scales"] = a.scales;
    j["files_written"] = result.files_written;
    j["files_skipped"] = result.files_skipped;
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("prepared dataset '{}' at {}: {} HR images, scales {}, {} files written, {} skipped\n",
                       result.dataset.name, result.dataset.root.string(), result.dataset.hr_stems.size(),
                       fmt::join(a.scales, ","), result.files_written, result.files_skipped);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- run

struct RunArgs {
  std::vector<std::string> models;
  std::string dataset;
  int scale = 0;
  std::string criteria = "y-float-shave-scale";
  bool timing = false;
  std::string self_ensemble = "config";
  std::string records = "records.ndjson";
  bool append = false;
  std::string niqe_model;
  std::string device_label;
  int warmup = 1;
  int repeats = 1;
  std::string data_dir;
  std::string table_format = "markdown";
};

int cmd_run(const RunArgs& a, bool json, std::ostream& out, std::ostream& err) {
  const fs::path data = a.data_dir.empty() ? default_data_dir() : fs::path(a.data_dir);
  const auto preset = metrics::resolve_criteria(a.criteria, presets_dir(data));
  const auto models = resolve_models(a.models);
  if (models.empty()) throw UsageError("--models matched no model configs");
  const auto dataset = bench::open_dataset(a.dataset);

  const bool wants_niqe = std::find(preset.criteria.metrics.begin(), preset.criteria.metrics.end(),
                                    "niqe") != preset.criteria.metrics.end();
  auto registry = metrics::EvaluatorRegistry::with_builtins(
      wants_niqe ? load_niqe(a.niqe_model, data, false) : std::nullopt);
  registry.freeze();

  bench::RunOptions opts;
  opts.timing = a.timing;
  opts.warmup = a.warmup;
  opts.repeats = a.repeats;
  if (a.self_ensemble == "force") opts.self_ensemble = bench::SelfEnsembleMode::kForce;
  else if (a.self_ensemble == "off") opts.self_ensemble = bench::SelfEnsembleMode::kOff;
  else opts.self_ensemble = bench::SelfEnsembleMode::kConfig;
  opts.runner.device_label = a.device_label;
  opts.log = [&](std::string_view msg) { err << msg << '\n'; };

  bench::RunManifest manifest;
  manifest.run_id = make_run_id();
  manifest.timestamp = utc_timestamp();
  manifest.criteria = preset.criteria;
  manifest.criteria_name = preset.name;
  for (const auto& m : models) manifest.models.push_back(m.name);
  manifest.datasets = {dataset.name};
  manifest.scales = {a.scale};
  manifest.environment = a.device_label;
  manifest.timing = a.timing;
  manifest.self_ensemble = std::string(bench::to_string(opts.self_ensemble));
  write_text(a.records + ".manifest.json", bench::run_manifest_to_json(manifest).dump(2) + "\n");

  bench::RecordWriter writer(a.records, !a.append);
  opts.on_record = [&](const bench::BenchRecord& r) { writer.append(r); };
  const auto records = bench::run_benchmark(models, dataset, a.scale, preset.criteria, registry, opts);

  const auto format = json ? bench::TableFormat::kJson : bench::parse_table_format(a.table_format);
  out << bench::emit_table(records, format);
  const auto errored = std::count_if(records.begin(), records.end(),
                                     [](const bench::BenchRecord& r) { return !r.ok; });
  if (errored > 0) {
    err << fmt::format("{} of {} records errored; partial results kept in {}\n", errored, records.size(),
                       a.records);
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- report

struct ReportArgs {
  std::string records;
  std::string format = "markdown";
  std::string output;
  std::string scatter;
  std::vector<std::string> exclude;
  std::string scatter_out;
};

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  const auto records = bench::read_records(a.records);
  if (records.empty()) throw Error(ErrorKind::kFormat, fmt::format("{} holds no records", a.records));
  const auto format = bench::parse_table_format(a.format);
  const std::string table = bench::emit_table(records, format);
  if (a.output.empty()) {
    out << table;
  } else {
    write_text(a.output, table);
  }
  if (!a.scatter.empty()) {
    const auto colon = a.scatter.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == a.scatter.size()) {
      throw UsageError(fmt::format("--scatter expects x:y, got '{}'", a.scatter));
    }
    const std::string x = a.scatter.substr(0, colon);
    const std::string y = a.scatter.substr(colon + 1);
    const auto plot = bench::emit_scatter(records, x, y, a.exclude);
    const std::string prefix = a.scatter_out.empty() ? fmt::format("scatter-{}-{}", x, y) : a.scatter_out;
    write_text(prefix + ".svg", plot.svg);
    write_text(prefix + ".csv", plot.csv);
    err << fmt::format("wrote {0}.svg and {0}.csv ({1} points, {2} excluded)\n", prefix, plot.points.size(),
                       plot.excluded.size());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- listings

int cmd_list_models(const std::vector<std::string>& patterns, bool json, std::ostream& out) {
  std::vector<runtime::ModelConfig> models = {
      runtime::builtin_model(runtime::RunnerKind::kBuiltinNearest),
      runtime::builtin_model(runtime::RunnerKind::kBuiltinBilinear),
      runtime::builtin_model(runtime::RunnerKind::kBuiltinBicubic)};
  if (!patterns.empty()) {
    for (auto& m : runtime::load_model_configs(patterns)) models.push_back(std::move(m));
  }
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : models) {
      ordered_json j;
      j["name"] = m.name;
      j["runner"] = std::string(runtime::to_string(m.runner.kind));
      j["scales"] = m.scales;
      j["self_ensemble"] = m.self_ensemble;
      j["source"] = m.source.string();
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& m : models) {
    out << fmt::format("{:<20} {:<18} x{:<10} {}{}\n", m.name, runtime::to_string(m.runner.kind),
                       fmt::join(m.scales, ","), m.self_ensemble ? "self-ensemble " : "",
                       m.source.empty() ? std::string("(builtin)") : m.source.string());
  }
  return kExitOk;
}

int cmd_list_evaluators(const std::string& niqe_model, const std::string& data_dir, bool json,
                        std::ostream& out) {
  const fs::path data = data_dir.empty() ? default_data_dir() : fs::path(data_dir);
  auto registry = metrics::EvaluatorRegistry::with_builtins(load_niqe(niqe_model, data, false));
  if (!json) {
    out << metrics::format_evaluator_list(registry);
    return kExitOk;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& info : registry.list()) {
    ordered_json j;
    j["id"] = info.id;
    j["unit"] = info.traits.unit;
    j["decimals"] = info.traits.decimals;
    j["higher_is_better"] = info.traits.higher_is_better;
    j["description"] = info.traits.description;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- validate-config

int cmd_validate(const std::vector<std::string>& files, bool json, std::ostream& out) {
  bool any = false;
  ordered_json arr = ordered_json::array();
  for (const auto& f : files) {
    const auto diags = runtime::validate_config(f);
    any = any || !diags.empty();
    if (json) {
      ordered_json j;
      j["file"] = f;
      j["valid"] = diags.empty();
      j["diagnostics"] = ordered_json::array();
      for (const auto& d : diags) j["diagnostics"].push_back({{"path", d.path}, {"message", d.message}});
      arr.push_back(std::move(j));
    } else if (diags.empty()) {
      out << f << ": ok\n";
    } else {
      for (const auto& d : diags) out << f << ": " << runtime::format_diagnostic(d) << '\n';
    }
  }
  if (json) out << arr.dump(2) << '\n';
  return any ? kExitUsage : kExitOk;
}

// ---------------------------------------------------------------- fit-niqe

struct FitArgs {
  std::vector<std::string> images;
  int synthetic = 0;
  int synthetic_size = 288;
  std::uint64_t seed = 1;
  std::string out;
  int patch_size = 96;
  double sharpness = 0.75;
  std::string description;
};

std::vector<fs::path> collect_pngs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> dir_files;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.path().extension() == ".png") dir_files.push_back(e.path());
      }
      std::sort(dir_files.begin(), dir_files.end());
      files.insert(files.end(), dir_files.begin(), dir_files.end());
    } else {
      files.emplace_back(in);
    }
  }
  return files;
}

int cmd_fit_niqe(const FitArgs& a, bool json, std::ostream& out, std::ostream& err) {
  std::vector<PlanarImage> corpus;
  std::string description = a.description;
  if (a.synthetic > 0) {
    for (int i = 0; i < a.synthetic; ++i) {
      corpus.push_back(synthetic::texture(a.synthetic_size, a.synthetic_size, a.seed + static_cast<unsigned>(i)));
    }
    if (description.empty()) {
      description = fmt::format("synthetic 1/f textures: {} images of {}x{}, seeds {}..{}", a.synthetic,
                                a.synthetic_size, a.synthetic_size, a.seed, a.seed + a.synthetic - 1);
    }
  }
  for (const auto& f : collect_pngs(a.images)) corpus.push_back(load_png(f));
  if (corpus.empty()) throw UsageError("fit-niqe needs --images or --synthetic");
  err << fmt::format("fitting pristine model on {} images\n", corpus.size());
  auto model = metrics::fit_pristine_model(corpus, a.patch_size, a.sharpness);
  if (description.empty()) description = fmt::format("{} images", corpus.size());
  model.description = description;
  metrics::save_pristine_model(model, a.out);
  if (json) {
    ordered_json j;
    j["output"] = a.out;
    j["images"] = corpus.size();
    j["patch_size"] = a.patch_size;
    j["sharpness_fraction"] = a.sharpness;
    j["description"] = description;
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("wrote {} ({} images, patch {})\n", a.out, corpus.size(), a.patch_size);
  }
  return kExitOk;
}

// Best guess at what an unrecognized token was meant to be.
std::string usage_hint(const CLI::App& app, const std::vector<std::string>& args) {
  const CLI::App* sub = nullptr;
  std::vector<std::string> sub_names;
  for (const auto* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub_names.push_back(s->get_name());
  }
  for (const auto& a : args) {
    auto it = std::find(sub_names.begin(), sub_names.end(), a);
    if (it != sub_names.end()) {
      sub = app.get_subcommand(a);
      break;
    }
  }
  if (sub == nullptr) {
    for (const auto& a : args) {
      if (a.starts_with("-")) continue;
      const auto s = suggest(a, sub_names);
      if (!s.empty()) return fmt::format("unknown subcommand '{}'; did you mean '{}'?", a, s);
    }
  }
  std::vector<std::string> flags;
  const CLI::App& scope = sub != nullptr ? *sub : app;
  for (const auto* opt : scope.get_options()) {
    for (const auto& l : opt->get_lnames()) flags.push_back("--" + l);
  }
  for (const auto& a : args) {
    if (!a.starts_with("--")) continue;
    const std::string flag = a.substr(0, a.find('='));
    if (std::find(flags.begin(), flags.end(), flag) != flags.end()) continue;
    const auto s = suggest(flag, flags);
    if (!s.empty()) return fmt::format("unknown flag '{}'; did you mean '{}'?", flag, s);
    return fmt::format("unknown flag '{}'", flag);
  }
  return {};
}

}  // namespace

std::string suggest(std::string_view token, const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_d = std::string::npos;
  for (const auto& c : candidates) {
    const auto d = edit_distance(token, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  const std::size_t limit = std::max<std::size_t>(2, token.size() / 3);
  return best_d <= limit ? best : std::string();
}

fs::path default_data_dir() {
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const fs::path installed = exe.parent_path().parent_path() / SRBENCH_INSTALL_DATA_SUFFIX;
    if (fs::exists(installed / "presets")) return installed;
  }
  return SRBENCH_SOURCE_DATA_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark harness for image super-resolution models", "srbench"};
  app.set_version_flag("--version", SRBENCH_VERSION);
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  PrepareArgs prep;
  auto* prepare = app.add_subcommand("prepare", "Build LR/x<scale> images and a manifest from HR images");
  prepare->add_option("--hr", prep.hr_dir, "Directory of HR PNG images")->required();
  prepare->add_option("--out", prep.out_dir, "Dataset root to create or update")->required();
  prepare->add_option("--scales", prep.scales, "Downscaling factors, e.g. 2,4")->required()->delimiter(',');
  prepare->add_option("--name", prep.name, "Dataset name (default: output directory name)");
  prepare->add_flag("--force", prep.force, "Overwrite existing files whose checksum differs");
  add_format(prepare);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Evaluate models on a prepared dataset");
  run_cmd->add_option("--models", ra.models, "Model config files or globs; builtin:nearest|bilinear|bicubic")
      ->required()->delimiter(',');
  run_cmd->add_option("--dataset", ra.dataset, "Prepared dataset root")->required();
  run_cmd->add_option("--scale", ra.scale, "Upscaling factor")->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("--criteria", ra.criteria, "Preset name or criteria JSON file")->capture_default_str();
  run_cmd->add_flag("--timing", ra.timing, "Measure running time (serializes the run)");
  run_cmd->add_option("--self-ensemble", ra.self_ensemble, "force, config or off")
      ->check(CLI::IsMember({"force", "config", "off"}))->capture_default_str();
  run_cmd->add_option("--records", ra.records, "Record file (newline-delimited JSON)")->capture_default_str();
  run_cmd->add_flag("--append", ra.append, "Append to the record file instead of replacing it");
  run_cmd->add_option("--niqe-model", ra.niqe_model, "NIQE pristine model JSON");
  run_cmd->add_option("--device-label", ra.device_label, "Free-text hardware description stored with timings");
  run_cmd->add_option("--warmup", ra.warmup, "Untimed passes before timing a model")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  run_cmd->add_option("--repeats", ra.repeats, "Timed passes per image")
      ->check(CLI::PositiveNumber)->capture_default_str();
  run_cmd->add_option("--data-dir", ra.data_dir, "Directory holding presets/ and data/niqe/");
  run_cmd->add_option("--table-format", ra.table_format, "Summary table format: markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))->capture_default_str();
  add_format(run_cmd);

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Summarize a record file as a table and optional scatter plot");
  report->add_option("--records", rep.records, "Record file")->required();
  report->add_option("--format", rep.format, "Table format: markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))->capture_default_str();
  report->add_option("--output", rep.output, "Write the table here instead of standard output");
  report->add_option("--scatter", rep.scatter, "Scatter plot of two metrics, x:y (e.g. psnr:niqe)");
  report->add_option("--exclude", rep.exclude, "Models left out of the scatter plot")->delimiter(',');
  report->add_option("--scatter-out", rep.scatter_out, "Path prefix for the scatter .svg and .csv");

  std::vector<std::string> list_patterns;
  auto* list_models = app.add_subcommand("list-models", "List builtin models and the given model configs");
  list_models->add_option("--models", list_patterns, "Model config files or globs")->delimiter(',');
  add_format(list_models);

  std::string eval_niqe, eval_data;
  auto* list_evals = app.add_subcommand("list-evaluators", "List the registered metric evaluators");
  list_evals->add_option("--niqe-model", eval_niqe, "NIQE pristine model JSON");
  list_evals->add_option("--data-dir", eval_data, "Directory holding presets/ and data/niqe/");
  add_format(list_evals);

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate-config", "Check model config files against the schema");
  validate->add_option("configs", validate_files, "Model config files")->required();
  add_format(validate);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit-niqe", "Fit a NIQE pristine model on a corpus of clean images");
  fit_cmd->add_option("--images", fit.images, "PNG files or directories")->delimiter(',');
  fit_cmd->add_option("--synthetic", fit.synthetic, "Add this many generated texture images")
      ->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--synthetic-size", fit.synthetic_size, "Side length of generated images")
      ->capture_default_str();
  fit_cmd->add_option("--seed", fit.seed, "First seed for generated images")->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "Output model JSON")->required();
  fit_cmd->add_option("--patch-size", fit.patch_size, "Tile size")->capture_default_str();
  fit_cmd->add_option("--sharpness", fit.sharpness, "Tile sharpness threshold fraction")->capture_default_str();
  fit_cmd->add_option("--description", fit.description, "Free-text description stored in the model");
  add_format(fit_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("srbench");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "srbench: " << e.what() << '\n';
    if (const auto hint = usage_hint(app, args); !hint.empty()) err << "srbench: " << hint << '\n';
    err << "Run with --help for usage.\n";
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (prepare->parsed()) return cmd_prepare(prep, json, out);
    if (run_cmd->parsed()) return cmd_run(ra, json, out, err);
    if (report->parsed()) return cmd_report(rep, out, err);
    if (list_models->parsed()) return cmd_list_models(list_patterns, json, out);
    if (list_evals->parsed()) return cmd_list_evaluators(eval_niqe, eval_data, json, out);
    if (validate->parsed()) return cmd_validate(validate_files, json, out);
    if (fit_cmd->parsed()) return cmd_fit_niqe(fit, json, out, err);
  } catch (const UsageError& e) {
    err << "srbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "srbench: " << e.what() << '\n';
    return e.kind() == ErrorKind::kInvalidArgument ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "srbench: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace srbench::cli
