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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srbench/metrics/criteria.h"

namespace srbench::runtime {

inline constexpr int kModelSchemaVersion = 1;

enum class RunnerKind { kBuiltinNearest, kBuiltinBilinear, kBuiltinBicubic, kCommand, kServer };

std::string_view to_string(RunnerKind kind);
std::optional<RunnerKind> parse_runner_kind(std::string_view text);

// How the adapter scales pixel values before inference. The harness always
// exchanges 8-bit PNG files; the value is forwarded to the runner.
enum class InputRange { kByte255, kUnit01 };

std::string_view to_string(InputRange range);

struct RunnerSpec {
  RunnerKind kind = RunnerKind::kBuiltinBicubic;
  // Command: {input} {output} {scale} placeholders are substituted per call.
  // Server: the command that starts the long-running child.
  std::vector<std::string> argv;
  std::filesystem::path working_dir;
  std::map<std::string, std::string> env;
  double startup_timeout = 60.0;
  double request_timeout = 600.0;

  bool is_builtin() const noexcept {
    return kind != RunnerKind::kCommand && kind != RunnerKind::kServer;
  }
};

// Values published by the model's authors. Never computed by the harness.
struct ReportedValues {
  std::string dataset;  // empty matches any dataset
  int scale = 0;
  std::map<std::string, double> metrics;
};

struct ModelConfig {
  std::string name;
  std::vector<int> scales;
  RunnerSpec runner;
  InputRange input_range = InputRange::kByte255;
  bool self_ensemble = false;
  std::optional<metrics::ShaveRule> shave_override;
  std::string notes;
  std::vector<ReportedValues> reported;
  std::filesystem::path source;

  bool supports(int scale) const;
  const ReportedValues* reported_for(std::string_view dataset, int scale) const;
};

struct Diagnostic {
  std::string path;  // e.g. "runner.argv"
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string format_diagnostic(const Diagnostic& d);

// Reports every schema violation rather than stopping at the first.
std::vector<Diagnostic> validate_config_json(const nlohmann::json& j);
std::vector<Diagnostic> validate_config(const std::filesystem::path& path);

// Relative working directories resolve against `base_dir`.
ModelConfig model_config_from_json(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir = {});
ModelConfig load_model_config(const std::filesystem::path& path);

// Expands shell globs, loads each config and enforces unique names. Order
// follows the patterns, then sorted file names within a pattern.
std::vector<ModelConfig> load_model_configs(const std::vector<std::string>& patterns);

// Builtin models that need no config file.
ModelConfig builtin_model(RunnerKind kind, std::vector<int> scales = {1, 2, 3, 4, 8});

}  // namespace srbench::runtime
