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

#include <algorithm>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"
#include "srbench/runtime/model_config.h"
#include "test_util.h"

namespace srbench::runtime {
namespace {

using nlohmann::json;

json valid_config() {
  return json::parse(R"({
    "schema_version": 1,
    "name": "carn",
    "scales": [2, 3, 4],
    "runner": {"kind": "command", "argv": ["python", "carn.py", "{input}", "{output}", "{scale}"],
               "working_dir": "adapters", "env": {"OMP_NUM_THREADS": "1"}},
    "input_range": "unit01",
    "self_ensemble": false,
    "shave_override": {"mode": "fixed", "amount": 4},
    "notes": "official weights",
    "reported": [{"dataset": "bsd100", "scale": 4, "psnr": 27.58, "ssim": 0.7349}]
  })");
}

bool has_path(const std::vector<Diagnostic>& d, const std::string& path) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.path == path; });
}

TEST(ModelConfigTest, ValidConfigLoads) {
  EXPECT_TRUE(validate_config_json(valid_config()).empty());
  const ModelConfig m = model_config_from_json(valid_config(), "/cfg");
  EXPECT_EQ(m.name, "carn");
  EXPECT_EQ(m.scales, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(m.runner.kind, RunnerKind::kCommand);
  EXPECT_EQ(m.runner.working_dir, std::filesystem::path("/cfg/adapters"));
  EXPECT_EQ(m.runner.env.at("OMP_NUM_THREADS"), "1");
  EXPECT_EQ(m.input_range, InputRange::kUnit01);
  ASSERT_TRUE(m.shave_override.has_value());
  EXPECT_EQ(*m.shave_override, metrics::ShaveRule::fixed(4));
  ASSERT_NE(m.reported_for("bsd100", 4), nullptr);
  EXPECT_DOUBLE_EQ(m.reported_for("bsd100", 4)->metrics.at("psnr"), 27.58);
  EXPECT_EQ(m.reported_for("set5", 4), nullptr);
  EXPECT_TRUE(m.supports(3));
  EXPECT_FALSE(m.supports(8));
}

TEST(ModelConfigTest, EmptyScalesNamesField) {
  json j = valid_config();
  j["scales"] = json::array();
  const auto d = validate_config_json(j);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].path, "scales");
  EXPECT_EQ(format_diagnostic(d[0]), "scales: scales must be non-empty");
}

TEST(ModelConfigTest, ReportsEveryViolation) {
  json j = valid_config();
  j["schema_version"] = 2;
  j["name"] = "";
  j["scales"] = {2, 0, 2};
  j["runner"]["argv"] = {"python", "carn.py", "{input}"};
  j["input_range"] = "percent";
  j["self_ensemble"] = "yes";
  j["colour"] = "y";
  j["reported"][0]["psnr"] = "27.58";
  const auto d = validate_config_json(j);
  for (const char* p : {"schema_version", "name", "scales[1]", "scales[2]", "runner.argv", "input_range",
                        "self_ensemble", "colour", "reported[0].psnr"}) {
    EXPECT_TRUE(has_path(d, p)) << p;
  }
}

TEST(ModelConfigTest, ServerArgvMustNotCarryPaths) {
  json j = valid_config();
  j["runner"] = {{"kind", "server"}, {"argv", {"srv", "{input}"}}};
  EXPECT_TRUE(has_path(validate_config_json(j), "runner.argv"));
  j["runner"] = {{"kind", "warp-drive"}};
  EXPECT_TRUE(has_path(validate_config_json(j), "runner.kind"));
}

TEST(ModelConfigTest, InvalidConfigThrowsWithAllDiagnostics) {
  json j = valid_config();
  j.erase("name");
  j["scales"] = json::array();
  try {
    model_config_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("name"), std::string::npos);
    EXPECT_NE(msg.find("scales"), std::string::npos);
  }
}

TEST(ModelConfigTest, FileValidationAndGlobLoading) {
  testing::TempDir dir;
  std::ofstream(dir / "broken.json") << "{ not json";
  EXPECT_TRUE(has_path(validate_config(dir / "broken.json"), "$"));
  EXPECT_TRUE(has_path(validate_config(dir / "missing.json"), "$"));

  std::filesystem::create_directory(dir / "models");
  json a = valid_config();
  a["name"] = "b-model";
  json b = valid_config();
  b["name"] = "a-model";
  testing::write_json(dir / "models" / "1.json", a);
  testing::write_json(dir / "models" / "2.json", b);
  const auto models = load_model_configs({(dir / "models" / "*.json").string()});
  ASSERT_EQ(models.size(), 2u);
  // Order follows sorted file names, not model names.
  EXPECT_EQ(models[0].name, "b-model");
  EXPECT_EQ(models[0].source, dir / "models" / "1.json");
  EXPECT_EQ(models[0].runner.working_dir, dir / "models" / "adapters");

  testing::write_json(dir / "models" / "3.json", a);
  EXPECT_THROW(load_model_configs({(dir / "models" / "*.json").string()}), Error);
  EXPECT_THROW(load_model_configs({(dir / "nothing" / "*.json").string()}), Error);
}

TEST(ModelConfigTest, Builtins) {
  const ModelConfig m = builtin_model(RunnerKind::kBuiltinBicubic);
  EXPECT_EQ(m.name, "bicubic");
  EXPECT_TRUE(m.runner.is_builtin());
  EXPECT_TRUE(m.supports(4));
  EXPECT_EQ(parse_runner_kind("builtin-nearest"), RunnerKind::kBuiltinNearest);
  EXPECT_EQ(parse_runner_kind("nearest"), std::nullopt);
}

}  // namespace
}  // namespace srbench::runtime
