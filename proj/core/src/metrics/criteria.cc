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

#include "srbench/metrics/criteria.h"

#include <algorithm>
#include <fstream>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/color.h"
#include "srbench/error.h"
#include "srbench/metrics/full_reference.h"

namespace srbench::metrics {

using nlohmann::json;

std::string_view to_string(ColorChannels color) {
  return color == ColorChannels::kY ? "y" : "rgb";
}

int ShaveRule::amount_for(int scale) const {
  return mode == Mode::kFixed ? fixed_amount : scale + scale_offset;
}

void EvalCriteria::validate() const {
  if (shave.fixed_amount < 0 || shave.scale_offset < 0) {
    throw Error(ErrorKind::kConfig, "shave amounts must be >= 0");
  }
  if (metrics.empty()) throw Error(ErrorKind::kConfig, "criteria must name at least one metric");
  std::set<std::string> seen;
  for (const auto& m : metrics) {
    if (!seen.insert(m).second) {
      throw Error(ErrorKind::kConfig, fmt::format("metric '{}' listed twice", m));
    }
  }
}

PreparedPair apply_criteria(const PlanarImage& reference, const PlanarImage& output,
                            const EvalCriteria& criteria, int scale) {
  if (reference.width() != output.width() || reference.height() != output.height() ||
      reference.channels() != output.channels()) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("reference {}x{} and output {}x{} differ", reference.width(),
                            reference.height(), output.width(), output.height()));
  }
  PlanarImage ref = apply_precision(reference, criteria.precision);
  PlanarImage out = apply_precision(output, criteria.precision);
  if (criteria.color == ColorChannels::kY) {
    ref = luma_or_gray(ref);
    out = luma_or_gray(out);
  }
  const int amount = criteria.shave.amount_for(scale);
  return {shave(ref, amount), shave(out, amount)};
}

json shave_to_json(const ShaveRule& rule) {
  if (rule.mode == ShaveRule::Mode::kFixed) {
    return json{{"mode", "fixed"}, {"amount", rule.fixed_amount}};
  }
  return json{{"mode", "scale"}, {"offset", rule.scale_offset}};
}

ShaveRule shave_from_json(const json& j) {
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "scale") return ShaveRule::scale_equal(j.value("offset", 0));
  if (mode == "fixed") return ShaveRule::fixed(j.at("amount").get<int>());
  throw Error(ErrorKind::kConfig, fmt::format("unknown shave mode '{}'", mode));
}

json criteria_to_json(const EvalCriteria& c) {
  return json{{"color", std::string(to_string(c.color))},
              {"shave", shave_to_json(c.shave)},
              {"precision", std::string(to_string(c.precision))},
              {"metrics", c.metrics}};
}

EvalCriteria criteria_from_json(const json& j) {
  EvalCriteria c;
  const auto color = j.at("color").get<std::string>();
  if (color == "y") {
    c.color = ColorChannels::kY;
  } else if (color == "rgb") {
    c.color = ColorChannels::kRgb;
  } else {
    throw Error(ErrorKind::kConfig, fmt::format("unknown color channels '{}'", color));
  }
  c.shave = shave_from_json(j.at("shave"));
  const auto precision = j.at("precision").get<std::string>();
  if (precision == "float") {
    c.precision = PrecisionMode::kFloat;
  } else if (precision == "integer8") {
    c.precision = PrecisionMode::kInteger8;
  } else {
    throw Error(ErrorKind::kConfig, fmt::format("unknown precision '{}'", precision));
  }
  if (j.contains("metrics")) c.metrics = j.at("metrics").get<std::vector<std::string>>();
  c.validate();
  return c;
}

CriteriaPreset load_preset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open {}", path.string()));
  try {
    const json j = json::parse(in);
    CriteriaPreset p;
    p.name = j.value("name", path.stem().string());
    p.description = j.value("description", "");
    p.table_rows = j.value("table_rows", std::vector<std::string>{});
    p.criteria = criteria_from_json(j.at("criteria"));
    p.self_ensemble = j.value("self_ensemble", false);
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, fmt::format("{}: {}", path.string(), e.what()));
  } catch (const Error& e) {
    throw Error(e.kind(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::vector<CriteriaPreset> load_presets(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) throw Error(ErrorKind::kIo, fmt::format("cannot list {}: {}", dir.string(), ec.message()));
  std::sort(files.begin(), files.end());
  std::vector<CriteriaPreset> presets;
  for (const auto& f : files) presets.push_back(load_preset_file(f));
  return presets;
}

CriteriaPreset resolve_criteria(std::string_view spec, const std::filesystem::path& dir) {
  const std::filesystem::path as_path(spec);
  if (as_path.extension() == ".json" || as_path.has_parent_path()) {
    return load_preset_file(as_path);
  }
  const auto candidate = dir / (std::string(spec) + ".json");
  if (std::filesystem::exists(candidate)) return load_preset_file(candidate);
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  throw Error(ErrorKind::kConfig,
              fmt::format("unknown criteria preset '{}' (available: {})", spec,
                          names.empty() ? std::string("none") : fmt::format("{}", fmt::join(names, ", "))));
}

}  // namespace srbench::metrics
