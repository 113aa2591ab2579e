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

#include <span>
#include <string>
#include <vector>

#include "srbench/image.h"
#include "srbench/runtime/upscaler.h"

namespace srbench::runtime {

struct TimingOptions {
  int warmup = 1;
  int repeats = 3;
  bool self_ensemble = false;
};

struct TimingReport {
  // Per-image mean over `repeats` timed passes, in input order.
  std::vector<TimingSample> samples;
  // Every individual timed pass, grouped per image.
  std::vector<std::vector<double>> raw;
  bool valid = true;
  std::string error;
};

// `warmup` untimed passes on the first image, then `repeats` timed passes
// per image, strictly one at a time. A runner failure stops the benchmark
// and returns what was measured so far with valid = false.
TimingReport benchmark_timing(Upscaler& model, std::span<const PlanarImage> images, int scale,
                              const TimingOptions& options = {});

}  // namespace srbench::runtime
