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
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srbench/metrics/criteria.h"
#include "srbench/metrics/metric_result.h"
#include "srbench/runtime/upscaler.h"

namespace srbench::bench {

inline constexpr int kRecordSchemaVersion = 1;
inline constexpr const char* kHarnessVersion = "srbench-1";

// One (model, dataset, scale, image) result.
struct BenchRecord {
  std::string model;
  std::string dataset;
  int scale = 0;
  std::string image;
  bool ok = true;
  std::string error;
  bool self_ensemble = false;
  int shave = 0;
  std::vector<metrics::MetricResult> metrics;
  std::optional<runtime::TimingSample> timing;
  // Published values copied from the model config, kept apart from metrics.
  std::map<std::string, double> reported;
  std::string fingerprint;

  const metrics::MetricResult* metric(std::string_view id) const;
};

// Hash of the evaluation criteria and the harness version. Two records can
// only be compared when their fingerprints match.
std::string criteria_fingerprint(const metrics::EvalCriteria& criteria,
                                 std::string_view harness_version = kHarnessVersion);

nlohmann::ordered_json record_to_json(const BenchRecord& record);
BenchRecord record_from_json(const nlohmann::json& j);

// Single-line JSON, keys in a fixed order.
std::string serialize_record(const BenchRecord& record);

// Appends one record per line. Each line is handed to the kernel in a single
// write on an O_APPEND descriptor, so concurrent appenders never interleave
// within a record.
class RecordWriter {
 public:
  explicit RecordWriter(const std::filesystem::path& path, bool truncate = false);
  ~RecordWriter();
  RecordWriter(const RecordWriter&) = delete;
  RecordWriter& operator=(const RecordWriter&) = delete;

  void append(const BenchRecord& record);

 private:
  std::filesystem::path path_;
  int fd_ = -1;
};

std::vector<BenchRecord> read_records(const std::filesystem::path& path);

}  // namespace srbench::bench
