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

#include "srbench/bench/harness.h"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"
#include "srbench/png_io.h"
#include "srbench/runtime/ensemble.h"

namespace srbench::bench {

std::string_view to_string(SelfEnsembleMode mode) {
  switch (mode) {
    case SelfEnsembleMode::kForce: return "force";
    case SelfEnsembleMode::kConfig: return "config";
    case SelfEnsembleMode::kOff: return "off";
  }
  return "config";
}

namespace {

bool use_ensemble(const runtime::ModelConfig& m, SelfEnsembleMode mode) {
  switch (mode) {
    case SelfEnsembleMode::kForce: return true;
    case SelfEnsembleMode::kOff: return false;
    case SelfEnsembleMode::kConfig: return m.self_ensemble;
  }
  return m.self_ensemble;
}

void check_preconditions(const std::vector<runtime::ModelConfig>& models,
                         const DatasetSpec& dataset, int scale,
                         const metrics::EvalCriteria& criteria,
                         const metrics::EvaluatorRegistry& evaluators, const RunOptions& options) {
  if (!dataset.has_scale(scale) || dataset.lr.at(scale).empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("dataset '{}' has no LR images for scale {} (expected {})",
                            dataset.name, scale, (dataset.root / "LR" / fmt::format("x{}", scale)).string()));
  }
  for (const auto& m : models) {
    if (!m.supports(scale)) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("model '{}' does not support scale {}", m.name, scale));
    }
  }
  criteria.validate();
  for (const auto& id : criteria.metrics) {
    if (!evaluators.contains(id)) {
      throw Error(ErrorKind::kConfig, fmt::format("criteria name unknown evaluator '{}'", id));
    }
  }
  if (options.timing && options.repeats < 1) {
    throw Error(ErrorKind::kInvalidArgument, "timing needs at least one repeat");
  }
  if (options.timing && options.warmup < 0) {
    throw Error(ErrorKind::kInvalidArgument, "warmup count must be >= 0");
  }
  for (const auto& m : models) {
    if (options.timing && options.warmup < 1 && m.runner.kind == runtime::RunnerKind::kServer) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("model '{}': server runners need at least one warmup pass", m.name));
    }
  }
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const std::vector<runtime::ModelConfig>& models,
                                       const DatasetSpec& dataset, int scale,
                                       const metrics::EvalCriteria& criteria,
                                       const metrics::EvaluatorRegistry& evaluators,
                                       const RunOptions& options) {
  check_preconditions(models, dataset, scale, criteria, evaluators, options);
  const auto& stems = dataset.lr.at(scale);
  auto log = [&](std::string_view msg) {
    if (options.log) options.log(msg);
  };

  std::vector<BenchRecord> records;
  for (const auto& model : models) {
    const bool ensemble = use_ensemble(model, options.self_ensemble);
    metrics::EvalCriteria effective = criteria;
    if (model.shave_override) effective.shave = *model.shave_override;
    const std::string fingerprint = criteria_fingerprint(effective);
    const auto* reported = model.reported_for(dataset.name, scale);
    auto upscaler = runtime::make_upscaler(model, options.runner);
    bool warmed_up = false;
    log(fmt::format("model {} ({} images, scale {}{})", model.name, stems.size(), scale,
                    ensemble ? ", self-ensemble" : ""));

    for (const auto& stem : stems) {
      BenchRecord rec;
      rec.model = model.name;
      rec.dataset = dataset.name;
      rec.scale = scale;
      rec.image = stem;
      rec.self_ensemble = ensemble;
      rec.shave = effective.shave.amount_for(scale);
      rec.fingerprint = fingerprint;
      if (reported != nullptr) rec.reported = reported->metrics;
      try {
        const PlanarImage lr = load_png(dataset.lr_path(scale, stem));
        const PlanarImage hr_full = load_png(dataset.hr_path(stem));
        const CropRect region =
            hr_region(hr_full.width(), hr_full.height(), lr.width(), lr.height(), scale);
        const PlanarImage hr = crop(hr_full, region.x, region.y, region.width, region.height);

        std::optional<runtime::UpscaleResult> result;
        if (options.timing) {
          if (!warmed_up) {
            for (int i = 0; i < options.warmup; ++i) runtime::run_model(*upscaler, lr, scale, ensemble);
            warmed_up = true;
          }
          runtime::TimingSample mean;
          for (int r = 0; r < options.repeats; ++r) {
            auto pass = runtime::run_model(*upscaler, lr, scale, ensemble);
            mean.wall_seconds += pass.timing.wall_seconds;
            mean.raw_seconds += pass.timing.raw_seconds;
            mean.overhead_seconds += pass.timing.overhead_seconds;
            mean.startup_inclusive = pass.timing.startup_inclusive;
            if (!result) result = std::move(pass);
          }
          mean.wall_seconds /= options.repeats;
          mean.raw_seconds /= options.repeats;
          mean.overhead_seconds /= options.repeats;
          mean.device_label = options.runner.device_label;
          rec.timing = mean;
        } else {
          result = runtime::run_model(*upscaler, lr, scale, ensemble);
        }

        const metrics::PreparedPair pair =
            metrics::apply_criteria(hr, result->image, effective, scale);
        metrics::EvalInput input{pair.reference, pair.output, scale, std::nullopt};
        if (rec.timing) input.runtime_seconds = rec.timing->wall_seconds;
        for (const auto& id : criteria.metrics) rec.metrics.push_back(evaluators.evaluate(id, input));
      } catch (const Error& e) {
        rec.ok = false;
        rec.error = e.what();
        rec.metrics.clear();
        rec.timing.reset();
        upscaler->reset();
        warmed_up = false;
        log(fmt::format("  {}: error: {}", stem, e.what()));
      }
      if (options.on_record) options.on_record(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

nlohmann::ordered_json run_manifest_to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["format"] = "srbench.run-manifest";
  j["version"] = kRecordSchemaVersion;
  j["run_id"] = m.run_id;
  j["timestamp"] = m.timestamp;
  j["harness"] = kHarnessVersion;
  j["criteria_name"] = m.criteria_name;
  j["criteria"] = nlohmann::ordered_json::parse(metrics::criteria_to_json(m.criteria).dump());
  j["fingerprint"] = criteria_fingerprint(m.criteria);
  j["models"] = m.models;
  j["datasets"] = m.datasets;
  j["scales"] = m.scales;
  j["timing"] = m.timing;
  j["self_ensemble"] = m.self_ensemble;
  j["environment"] = m.environment;
  return j;
}

RunManifest run_manifest_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "srbench.run-manifest") {
      throw Error(ErrorKind::kFormat, "not a run manifest");
    }
    RunManifest m;
    m.run_id = j.at("run_id").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.criteria_name = j.at("criteria_name").get<std::string>();
    m.criteria = metrics::criteria_from_json(j.at("criteria"));
    m.models = j.at("models").get<std::vector<std::string>>();
    m.datasets = j.at("datasets").get<std::vector<std::string>>();
    m.scales = j.at("scales").get<std::vector<int>>();
    m.timing = j.at("timing").get<bool>();
    m.self_ensemble = j.at("self_ensemble").get<std::string>();
    m.environment = j.at("environment").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, fmt::format("run manifest: {}", e.what()));
  }
}

}  // namespace srbench::bench
