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

#include <string>
#include <string_view>

namespace srbench::metrics {

enum class MetricStatus { kOk, kInfinite, kUndefined };

std::string_view to_string(MetricStatus status);
MetricStatus parse_metric_status(std::string_view text);

// One metric value. Infinite is only produced by PSNR on identical inputs;
// Undefined marks a metric that could not be computed for this image.
struct MetricResult {
  std::string id;
  double value = 0.0;
  MetricStatus status = MetricStatus::kOk;

  bool ok() const noexcept { return status == MetricStatus::kOk; }
  friend bool operator==(const MetricResult&, const MetricResult&) = default;
};

}  // namespace srbench::metrics
