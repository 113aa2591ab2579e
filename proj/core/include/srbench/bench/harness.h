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

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srbench/bench/dataset.h"
#include "srbench/bench/records.h"
#include "srbench/metrics/criteria.h"
#include "srbench/metrics/evaluator.h"
#include "srbench/runtime/model_config.h"
#include "srbench/runtime/upscaler.h"

namespace srbench::bench {

enum class SelfEnsembleMode { kForce, kConfig, kOff };

std::string_view to_string(SelfEnsembleMode mode);

struct RunOptions {
  bool timing = false;
  int warmup = 1;
  int repeats = 1;
  SelfEnsembleMode self_ensemble = SelfEnsembleMode::kConfig;
  runtime::RunnerOptions runner;
  // Called after each record is produced, in record order.
  std::function<void(const BenchRecord&)> on_record;
  // Progress messages.
  std::function<void(std::string_view)> log;
};

// Evaluates every model on every LR image of `dataset` at `scale`.
//
// Records come out in model order, then image-stem order. A failure on one
// image is recorded as an errored row and the run moves on; the model's
// runner is reset first. Unsupported scales, a missing LR/x<scale>
// directory, or unknown metric ids abort before any model runs.
//
// With timing enabled, `warmup` untimed passes precede each model's first
// image and every image is run `repeats` times; metrics use the first timed
// output. Without timing, records carry no timing at all so repeated runs
// are byte-identical.
std::vector<BenchRecord> run_benchmark(const std::vector<runtime::ModelConfig>& models,
                                       const DatasetSpec& dataset, int scale,
                                       const metrics::EvalCriteria& criteria,
                                       const metrics::EvaluatorRegistry& evaluators,
                                       const RunOptions& options = {});

// Describes one `run` invocation. Serialized next to the record file with a
// fixed key order.
struct RunManifest {
  std::string run_id;
  std::string timestamp;  // UTC, ISO 8601
  metrics::EvalCriteria criteria;
  std::string criteria_name;
  std::vector<std::string> models;
  std::vector<std::string> datasets;
  std::vector<int> scales;
  std::string environment;
  bool timing = false;
  std::string self_ensemble;
};

nlohmann::ordered_json run_manifest_to_json(const RunManifest& manifest);
RunManifest run_manifest_from_json(const nlohmann::json& j);

}  // namespace srbench::bench
