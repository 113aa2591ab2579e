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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srbench/image.h"

namespace srbench::metrics {

enum class ColorChannels { kY, kRgb };

std::string_view to_string(ColorChannels color);

// How many border pixels are removed before full-reference metrics.
// ScaleEqual removes scale + scale_offset pixels (offset 6 expresses the
// "6 + scale" DIV2K convention); Fixed removes fixed_amount regardless of
// scale.
struct ShaveRule {
  enum class Mode { kScaleEqual, kFixed };
  Mode mode = Mode::kScaleEqual;
  int fixed_amount = 0;
  int scale_offset = 0;

  int amount_for(int scale) const;
  // The same rule pinned to a concrete scale.
  ShaveRule resolved(int scale) const { return fixed(amount_for(scale)); }

  static ShaveRule scale_equal(int offset = 0) { return {Mode::kScaleEqual, 0, offset}; }
  static ShaveRule fixed(int amount) { return {Mode::kFixed, amount, 0}; }

  friend bool operator==(const ShaveRule&, const ShaveRule&) = default;
};

struct EvalCriteria {
  ColorChannels color = ColorChannels::kY;
  ShaveRule shave;
  PrecisionMode precision = PrecisionMode::kFloat;
  std::vector<std::string> metrics{"psnr", "ssim"};

  void validate() const;
  friend bool operator==(const EvalCriteria&, const EvalCriteria&) = default;
};

struct PreparedPair {
  PlanarImage reference;
  PlanarImage output;
};

// quantize (Integer8 only) -> color extraction (Y only) -> shave. Gray
// inputs pass through the color step unchanged.
PreparedPair apply_criteria(const PlanarImage& reference, const PlanarImage& output,
                            const EvalCriteria& criteria, int scale);

// A named, file-backed criteria set describing how one family of published
// results was evaluated. `self_ensemble` records whether those results used
// geometric self-ensemble.
struct CriteriaPreset {
  std::string name;
  std::string description;
  std::vector<std::string> table_rows;
  EvalCriteria criteria;
  bool self_ensemble = false;
};

nlohmann::json shave_to_json(const ShaveRule& rule);
ShaveRule shave_from_json(const nlohmann::json& j);
nlohmann::json criteria_to_json(const EvalCriteria& criteria);
EvalCriteria criteria_from_json(const nlohmann::json& j);

CriteriaPreset load_preset_file(const std::filesystem::path& path);
std::vector<CriteriaPreset> load_presets(const std::filesystem::path& dir);

// `spec` is either a path to a JSON file or the name of a preset in `dir`.
CriteriaPreset resolve_criteria(std::string_view spec, const std::filesystem::path& dir);

}  // namespace srbench::metrics
