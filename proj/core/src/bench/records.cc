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

#include "srbench/bench/records.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"
#include "srbench/hash.h"

namespace srbench::bench {

using nlohmann::json;
using nlohmann::ordered_json;

const metrics::MetricResult* BenchRecord::metric(std::string_view id) const {
  for (const auto& m : metrics) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

std::string criteria_fingerprint(const metrics::EvalCriteria& criteria,
                                 std::string_view harness_version) {
  ordered_json j;
  j["harness"] = harness_version;
  j["criteria"] = metrics::criteria_to_json(criteria);
  return sha256_hex(j.dump()).substr(0, 16);
}

ordered_json record_to_json(const BenchRecord& r) {
  ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["model"] = r.model;
  j["dataset"] = r.dataset;
  j["scale"] = r.scale;
  j["image"] = r.image;
  j["status"] = r.ok ? "ok" : "error";
  j["error"] = r.ok ? json(nullptr) : json(r.error);
  j["self_ensemble"] = r.self_ensemble;
  j["shave"] = r.shave;
  ordered_json metrics = ordered_json::array();
  for (const auto& m : r.metrics) {
    ordered_json e;
    e["id"] = m.id;
    e["value"] = m.ok() ? ordered_json(m.value) : ordered_json(nullptr);
    e["status"] = std::string(metrics::to_string(m.status));
    metrics.push_back(std::move(e));
  }
  j["metrics"] = std::move(metrics);
  if (r.timing) {
    ordered_json t;
    t["wall_seconds"] = r.timing->wall_seconds;
    t["raw_seconds"] = r.timing->raw_seconds;
    t["overhead_seconds"] = r.timing->overhead_seconds;
    t["startup_inclusive"] = r.timing->startup_inclusive;
    t["device"] = r.timing->device_label;
    j["timing"] = std::move(t);
  } else {
    j["timing"] = nullptr;
  }
  ordered_json reported = ordered_json::object();
  for (const auto& [k, v] : r.reported) reported[k] = v;
  j["reported"] = std::move(reported);
  j["fingerprint"] = r.fingerprint;
  return j;
}

BenchRecord record_from_json(const json& j) {
  const int version = j.at("schema_version").get<int>();
  if (version != kRecordSchemaVersion) {
    throw Error(ErrorKind::kFormat, fmt::format("unsupported record schema version {}", version));
  }
  BenchRecord r;
  r.model = j.at("model").get<std::string>();
  r.dataset = j.at("dataset").get<std::string>();
  r.scale = j.at("scale").get<int>();
  r.image = j.at("image").get<std::string>();
  r.ok = j.at("status").get<std::string>() == "ok";
  if (!r.ok && j.at("error").is_string()) r.error = j["error"].get<std::string>();
  r.self_ensemble = j.value("self_ensemble", false);
  r.shave = j.value("shave", 0);
  for (const auto& e : j.at("metrics")) {
    metrics::MetricResult m;
    m.id = e.at("id").get<std::string>();
    m.status = metrics::parse_metric_status(e.at("status").get<std::string>());
    if (m.status == metrics::MetricStatus::kOk) {
      m.value = e.at("value").get<double>();
    } else if (m.status == metrics::MetricStatus::kInfinite) {
      m.value = std::numeric_limits<double>::infinity();
    } else {
      m.value = std::numeric_limits<double>::quiet_NaN();
    }
    r.metrics.push_back(std::move(m));
  }
  if (j.contains("timing") && !j["timing"].is_null()) {
    const json& t = j["timing"];
    runtime::TimingSample s;
    s.wall_seconds = t.at("wall_seconds").get<double>();
    s.raw_seconds = t.value("raw_seconds", s.wall_seconds);
    s.overhead_seconds = t.value("overhead_seconds", 0.0);
    s.startup_inclusive = t.value("startup_inclusive", false);
    s.device_label = t.value("device", "");
    r.timing = s;
  }
  if (j.contains("reported")) r.reported = j["reported"].get<std::map<std::string, double>>();
  r.fingerprint = j.value("fingerprint", "");
  return r;
}

std::string serialize_record(const BenchRecord& record) {
  return record_to_json(record).dump();
}

RecordWriter::RecordWriter(const std::filesystem::path& path, bool truncate) : path_(path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const int flags = O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC | (truncate ? O_TRUNC : 0);
  fd_ = ::open(path.c_str(), flags, 0644);
  if (fd_ < 0) {
    throw Error(ErrorKind::kIo,
                fmt::format("cannot open record file {}: {}", path.string(), std::strerror(errno)));
  }
}

RecordWriter::~RecordWriter() {
  if (fd_ >= 0) ::close(fd_);
}

void RecordWriter::append(const BenchRecord& record) {
  const std::string line = serialize_record(record) + "\n";
  ssize_t n;
  do {
    n = ::write(fd_, line.data(), line.size());
  } while (n < 0 && errno == EINTR);
  if (n != static_cast<ssize_t>(line.size())) {
    throw Error(ErrorKind::kIo, fmt::format("short write to {}", path_.string()));
  }
}

std::vector<BenchRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open {}", path.string()));
  std::vector<BenchRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
    } catch (const Error& e) {
      throw Error(ErrorKind::kFormat, fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
    }
  }
  return records;
}

}  // namespace srbench::bench
