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

#include "srbench/runtime/model_config.h"

#include <glob.h>

#include <algorithm>
#include <fstream>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"

namespace srbench::runtime {

using nlohmann::json;

namespace {

constexpr std::string_view kKnownKeys[] = {"schema_version", "name",     "scales",
                                           "runner",         "input_range", "self_ensemble",
                                           "shave_override", "notes",    "reported"};
constexpr std::string_view kRunnerKeys[] = {"kind",     "argv",           "working_dir",
                                            "env",      "startup_timeout", "request_timeout"};

bool has_placeholder(const std::vector<std::string>& argv, std::string_view token) {
  return std::any_of(argv.begin(), argv.end(),
                     [&](const std::string& a) { return a.find(token) != std::string::npos; });
}

template <std::size_t N>
void check_unknown_keys(const json& j, const std::string_view (&known)[N], std::string_view prefix,
                        std::vector<Diagnostic>& out) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      out.push_back({fmt::format("{}{}", prefix, key), "unknown field"});
    }
  }
}

void validate_runner(const json& r, std::vector<Diagnostic>& out) {
  if (!r.is_object()) {
    out.push_back({"runner", "must be an object"});
    return;
  }
  check_unknown_keys(r, kRunnerKeys, "runner.", out);
  std::optional<RunnerKind> kind;
  if (!r.contains("kind")) {
    out.push_back({"runner.kind", "is required"});
  } else if (!r["kind"].is_string()) {
    out.push_back({"runner.kind", "must be a string"});
  } else {
    kind = parse_runner_kind(r["kind"].get<std::string>());
    if (!kind) {
      out.push_back({"runner.kind",
                     fmt::format("unknown runner kind '{}' (expected builtin-nearest, "
                                 "builtin-bilinear, builtin-bicubic, command or server)",
                                 r["kind"].get<std::string>())});
    }
  }
  const bool needs_argv = kind && (*kind == RunnerKind::kCommand || *kind == RunnerKind::kServer);
  std::vector<std::string> argv;
  if (r.contains("argv")) {
    const json& a = r["argv"];
    if (!a.is_array() || !std::all_of(a.begin(), a.end(), [](const json& e) { return e.is_string(); })) {
      out.push_back({"runner.argv", "must be an array of strings"});
    } else {
      argv = a.get<std::vector<std::string>>();
      if (kind && !needs_argv) {
        out.push_back({"runner.argv", "only command and server runners take argv"});
      }
    }
  }
  if (needs_argv) {
    if (argv.empty()) {
      out.push_back({"runner.argv", fmt::format("{} runner requires a non-empty argv",
                                                to_string(*kind))});
    } else if (*kind == RunnerKind::kCommand) {
      for (std::string_view ph : {"{input}", "{output}"}) {
        if (!has_placeholder(argv, ph)) {
          out.push_back({"runner.argv", fmt::format("command argv must contain the {} placeholder", ph)});
        }
      }
    } else if (has_placeholder(argv, "{input}") || has_placeholder(argv, "{output}")) {
      out.push_back({"runner.argv",
                     "server argv must not use {input}/{output}; paths travel in requests"});
    }
  }
  if (r.contains("working_dir") && !r["working_dir"].is_string()) {
    out.push_back({"runner.working_dir", "must be a string"});
  }
  if (r.contains("env")) {
    const json& e = r["env"];
    if (!e.is_object()) {
      out.push_back({"runner.env", "must be an object of strings"});
    } else {
      for (const auto& [k, v] : e.items()) {
        if (!v.is_string()) out.push_back({"runner.env." + k, "must be a string"});
      }
    }
  }
  for (const char* key : {"startup_timeout", "request_timeout"}) {
    if (r.contains(key) && (!r[key].is_number() || r[key].get<double>() <= 0.0)) {
      out.push_back({fmt::format("runner.{}", key), "must be a positive number of seconds"});
    }
  }
}

void validate_shave(const json& s, std::vector<Diagnostic>& out) {
  if (!s.is_object() || !s.contains("mode") || !s["mode"].is_string()) {
    out.push_back({"shave_override.mode", "must be \"scale\" or \"fixed\""});
    return;
  }
  const auto mode = s["mode"].get<std::string>();
  if (mode == "fixed") {
    if (!s.contains("amount") || !s["amount"].is_number_integer() || s["amount"].get<int>() < 0) {
      out.push_back({"shave_override.amount", "must be a non-negative integer"});
    }
  } else if (mode == "scale") {
    if (s.contains("offset") &&
        (!s["offset"].is_number_integer() || s["offset"].get<int>() < 0)) {
      out.push_back({"shave_override.offset", "must be a non-negative integer"});
    }
  } else {
    out.push_back({"shave_override.mode", fmt::format("unknown shave mode '{}'", mode)});
  }
}

void validate_reported(const json& rep, std::vector<Diagnostic>& out) {
  if (!rep.is_array()) {
    out.push_back({"reported", "must be an array"});
    return;
  }
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const json& e = rep[i];
    const std::string p = fmt::format("reported[{}]", i);
    if (!e.is_object()) {
      out.push_back({p, "must be an object"});
      continue;
    }
    if (!e.contains("scale") || !e["scale"].is_number_integer() || e["scale"].get<int>() < 1) {
      out.push_back({p + ".scale", "must be a positive integer"});
    }
    for (const auto& [k, v] : e.items()) {
      if (k == "scale") continue;
      if (k == "dataset") {
        if (!v.is_string()) out.push_back({p + ".dataset", "must be a string"});
      } else if (!v.is_number()) {
        out.push_back({p + "." + k, "metric values must be numbers"});
      }
    }
  }
}

std::filesystem::path resolve_dir(const std::filesystem::path& dir,
                                  const std::filesystem::path& base) {
  if (dir.empty()) return base;
  if (dir.is_absolute() || base.empty()) return dir;
  return base / dir;
}

}  // namespace

std::string_view to_string(RunnerKind kind) {
  switch (kind) {
    case RunnerKind::kBuiltinNearest: return "builtin-nearest";
    case RunnerKind::kBuiltinBilinear: return "builtin-bilinear";
    case RunnerKind::kBuiltinBicubic: return "builtin-bicubic";
    case RunnerKind::kCommand: return "command";
    case RunnerKind::kServer: return "server";
  }
  return "unknown";
}

std::optional<RunnerKind> parse_runner_kind(std::string_view text) {
  for (RunnerKind k : {RunnerKind::kBuiltinNearest, RunnerKind::kBuiltinBilinear,
                       RunnerKind::kBuiltinBicubic, RunnerKind::kCommand, RunnerKind::kServer}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(InputRange range) {
  return range == InputRange::kUnit01 ? "unit01" : "byte255";
}

bool ModelConfig::supports(int scale) const {
  return std::find(scales.begin(), scales.end(), scale) != scales.end();
}

const ReportedValues* ModelConfig::reported_for(std::string_view dataset, int scale) const {
  const ReportedValues* fallback = nullptr;
  for (const auto& r : reported) {
    if (r.scale != scale) continue;
    if (r.dataset == dataset) return &r;
    if (r.dataset.empty() && fallback == nullptr) fallback = &r;
  }
  return fallback;
}

std::string format_diagnostic(const Diagnostic& d) {
  return fmt::format("{}: {}", d.path, d.message);
}

std::vector<Diagnostic> validate_config_json(const json& j) {
  std::vector<Diagnostic> out;
  if (!j.is_object()) {
    out.push_back({"$", "config must be a JSON object"});
    return out;
  }
  check_unknown_keys(j, kKnownKeys, "", out);
  if (!j.contains("schema_version")) {
    out.push_back({"schema_version", fmt::format("is required (expected {})", kModelSchemaVersion)});
  } else if (!j["schema_version"].is_number_integer() ||
             j["schema_version"].get<int>() != kModelSchemaVersion) {
    out.push_back({"schema_version", fmt::format("unsupported version {} (expected {})",
                                                 j["schema_version"].dump(), kModelSchemaVersion)});
  }
  if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty()) {
    out.push_back({"name", "must be a non-empty string"});
  }
  if (!j.contains("scales") || !j["scales"].is_array()) {
    out.push_back({"scales", "must be an array of integers"});
  } else if (j["scales"].empty()) {
    out.push_back({"scales", "scales must be non-empty"});
  } else {
    std::set<int> seen;
    for (std::size_t i = 0; i < j["scales"].size(); ++i) {
      const json& s = j["scales"][i];
      if (!s.is_number_integer() || s.get<int>() < 1) {
        out.push_back({fmt::format("scales[{}]", i), "must be an integer >= 1"});
      } else if (!seen.insert(s.get<int>()).second) {
        out.push_back({fmt::format("scales[{}]", i), "duplicate scale"});
      }
    }
  }
  if (!j.contains("runner")) {
    out.push_back({"runner", "is required"});
  } else {
    validate_runner(j["runner"], out);
  }
  if (j.contains("input_range")) {
    const json& r = j["input_range"];
    if (!r.is_string() || (r != "byte255" && r != "unit01")) {
      out.push_back({"input_range", "must be \"byte255\" or \"unit01\""});
    }
  }
  if (j.contains("self_ensemble") && !j["self_ensemble"].is_boolean()) {
    out.push_back({"self_ensemble", "must be a boolean"});
  }
  if (j.contains("shave_override") && !j["shave_override"].is_null()) {
    validate_shave(j["shave_override"], out);
  }
  if (j.contains("notes") && !j["notes"].is_string()) {
    out.push_back({"notes", "must be a string"});
  }
  if (j.contains("reported")) validate_reported(j["reported"], out);
  return out;
}

std::vector<Diagnostic> validate_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {{"$", fmt::format("cannot open {}", path.string())}};
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    return {{"$", fmt::format("invalid JSON: {}", e.what())}};
  }
  return validate_config_json(j);
}

ModelConfig model_config_from_json(const json& j, const std::filesystem::path& base_dir) {
  const auto diags = validate_config_json(j);
  if (!diags.empty()) {
    std::string msg = "invalid model config:";
    for (const auto& d : diags) msg += "\n  " + format_diagnostic(d);
    throw Error(ErrorKind::kConfig, msg);
  }
  ModelConfig m;
  m.name = j["name"].get<std::string>();
  m.scales = j["scales"].get<std::vector<int>>();
  const json& r = j["runner"];
  m.runner.kind = *parse_runner_kind(r["kind"].get<std::string>());
  m.runner.argv = r.value("argv", std::vector<std::string>{});
  m.runner.working_dir = resolve_dir(r.value("working_dir", std::string()), base_dir);
  m.runner.env = r.value("env", std::map<std::string, std::string>{});
  m.runner.startup_timeout = r.value("startup_timeout", m.runner.startup_timeout);
  m.runner.request_timeout = r.value("request_timeout", m.runner.request_timeout);
  m.input_range = j.value("input_range", "byte255") == "unit01" ? InputRange::kUnit01
                                                                 : InputRange::kByte255;
  m.self_ensemble = j.value("self_ensemble", false);
  if (j.contains("shave_override") && !j["shave_override"].is_null()) {
    m.shave_override = metrics::shave_from_json(j["shave_override"]);
  }
  m.notes = j.value("notes", "");
  if (j.contains("reported")) {
    for (const json& e : j["reported"]) {
      ReportedValues rv;
      rv.dataset = e.value("dataset", "");
      rv.scale = e["scale"].get<int>();
      for (const auto& [k, v] : e.items()) {
        if (k != "dataset" && k != "scale") rv.metrics[k] = v.get<double>();
      }
      m.reported.push_back(std::move(rv));
    }
  }
  return m;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open {}", path.string()));
  try {
    const json j = json::parse(in);
    ModelConfig m = model_config_from_json(j, std::filesystem::absolute(path).parent_path());
    m.source = path;
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, fmt::format("{}: {}", path.string(), e.what()));
  } catch (const Error& e) {
    throw Error(e.kind(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::vector<ModelConfig> load_model_configs(const std::vector<std::string>& patterns) {
  std::vector<ModelConfig> models;
  std::set<std::string> names;
  for (const auto& pattern : patterns) {
    glob_t g{};
    const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
    std::vector<std::string> paths;
    if (rc == 0) {
      for (std::size_t i = 0; i < g.gl_pathc; ++i) paths.emplace_back(g.gl_pathv[i]);
    }
    globfree(&g);
    if (rc == GLOB_NOMATCH || paths.empty()) {
      throw Error(ErrorKind::kConfig, fmt::format("no model config matches '{}'", pattern));
    }
    if (rc != 0) throw Error(ErrorKind::kIo, fmt::format("cannot expand '{}'", pattern));
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      ModelConfig m = load_model_config(p);
      if (!names.insert(m.name).second) {
        throw Error(ErrorKind::kConfig,
                    fmt::format("{}: model name '{}' is already defined", p, m.name));
      }
      models.push_back(std::move(m));
    }
  }
  return models;
}

ModelConfig builtin_model(RunnerKind kind, std::vector<int> scales) {
  if (kind == RunnerKind::kCommand || kind == RunnerKind::kServer) {
    throw Error(ErrorKind::kInvalidArgument, "builtin_model needs a builtin runner kind");
  }
  ModelConfig m;
  m.name = std::string(to_string(kind)).substr(std::string_view("builtin-").size());
  m.scales = std::move(scales);
  m.runner.kind = kind;
  return m;
}

}  // namespace srbench::runtime
