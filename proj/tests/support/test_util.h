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

// Small fixtures shared by the unit and acceptance tests.
#pragma once

#include <stdlib.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace srbench::testing {

inline const std::filesystem::path kStubRunner = SRBENCH_STUB_RUNNER;
inline const std::filesystem::path kSourceDir = SRBENCH_SOURCE_DIR;

inline std::filesystem::path presets_dir() { return kSourceDir / "presets"; }
inline std::filesystem::path niqe_model_path() {
  return kSourceDir / "data" / "niqe" / "synthetic-pristine.json";
}

// Directory removed with its contents on destruction.
class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "srbench-test-XXXXXX").string();
    if (mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream(path) << j.dump(2);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Model config running the stub in server mode with extra flags.
inline nlohmann::json stub_server_config(const std::string& name, const std::vector<std::string>& flags,
                                         std::vector<int> scales = {2, 4}) {
  std::vector<std::string> argv = {kStubRunner.string(), "server"};
  argv.insert(argv.end(), flags.begin(), flags.end());
  return {{"schema_version", 1},
          {"name", name},
          {"scales", scales},
          {"runner", {{"kind", "server"}, {"argv", argv}}}};
}

inline nlohmann::json stub_command_config(const std::string& name, const std::vector<std::string>& flags,
                                          std::vector<int> scales = {2, 4}) {
  std::vector<std::string> argv = {kStubRunner.string(), "command", "--input", "{input}",
                                   "--output", "{output}", "--scale", "{scale}"};
  argv.insert(argv.end(), flags.begin(), flags.end());
  return {{"schema_version", 1},
          {"name", name},
          {"scales", scales},
          {"runner", {{"kind", "command"}, {"argv", argv}}}};
}

}  // namespace srbench::testing
