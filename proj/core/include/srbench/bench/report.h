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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srbench/bench/records.h"
#include "srbench/metrics/metric_result.h"

namespace srbench::bench {

enum class TableFormat { kMarkdown, kCsv, kJson };

std::string_view to_string(TableFormat format);
TableFormat parse_table_format(std::string_view text);

// Mean over the Ok values of one metric. Infinite values (identical images
// under PSNR) are counted but kept out of the mean; a metric whose values
// are all Infinite aggregates to Infinite.
struct MetricAggregate {
  std::string id;
  double mean = 0.0;
  metrics::MetricStatus status = metrics::MetricStatus::kUndefined;
  int ok_count = 0;
  int infinite_count = 0;
  int undefined_count = 0;

  bool operator==(const MetricAggregate&) const = default;
};

struct ModelAggregate {
  std::string model;
  int images = 0;
  int errored_images = 0;
  std::string first_error;
  bool self_ensemble = false;
  std::vector<MetricAggregate> metrics;  // in criteria order
  std::map<std::string, double> reported;
  std::string device_label;

  const MetricAggregate* metric(std::string_view id) const;
  bool operator==(const ModelAggregate&) const = default;
};

// One dataset and scale. Rows hold models without errors, sorted ascending by
// mean PSNR with ties broken by name; models with any errored image go to
// `errored`, sorted by name.
struct TableGroup {
  std::string dataset;
  int scale = 0;
  std::vector<std::string> fingerprints;
  std::vector<std::string> metric_ids;
  std::vector<std::string> reported_ids;
  std::vector<ModelAggregate> rows;
  std::vector<ModelAggregate> errored;

  bool operator==(const TableGroup&) const = default;
};

struct TableReport {
  std::vector<TableGroup> groups;  // sorted by dataset, then scale
  bool operator==(const TableReport&) const = default;
};

TableReport aggregate(const std::vector<BenchRecord>& records);

// Display precision for a metric id: psnr 2, ssim 4, niqe 3, runtime* 3,
// anything else 4.
int metric_decimals(std::string_view id);
std::string metric_label(std::string_view id);

// Throws kInvalidArgument on empty records.
std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format);
std::string emit_table(const TableReport& report, TableFormat format);

nlohmann::ordered_json table_to_json(const TableReport& report);
TableReport parse_table_json(std::string_view text);

struct ScatterPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

struct ScatterPlot {
  std::string x_metric;
  std::string y_metric;
  std::vector<ScatterPoint> points;
  std::vector<std::string> excluded;  // models dropped by request or for lack of a finite value
  std::string svg;
  std::string csv;
};

// One point per model aggregate. Models named in `exclude` (case-insensitive)
// are omitted and listed in the legend. Throws kInvalidArgument if either
// metric is absent from every record.
ScatterPlot emit_scatter(const std::vector<BenchRecord>& records, std::string_view x_metric,
                         std::string_view y_metric, const std::vector<std::string>& exclude = {});

}  // namespace srbench::bench
