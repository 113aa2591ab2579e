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
#include <memory>
#include <optional>
#include <string>

#include "srbench/image.h"
#include "srbench/runtime/model_config.h"

namespace srbench::runtime {

// Wall-clock time attributed to the model for one image.
//
// For Server runners `wall_seconds` has the mean no-op request round trip
// (`overhead_seconds`) subtracted; `raw_seconds` keeps the unadjusted value.
// Command runners include process startup and set `startup_inclusive`.
struct TimingSample {
  double wall_seconds = 0.0;
  double raw_seconds = 0.0;
  double overhead_seconds = 0.0;
  bool startup_inclusive = false;
  std::string device_label;
};

struct UpscaleResult {
  PlanarImage image;
  TimingSample timing;
};

// A model that maps an LR image to an image `scale` times larger. Not
// thread-safe: each instance serves one requester at a time.
class Upscaler {
 public:
  virtual ~Upscaler() = default;

  virtual const ModelConfig& config() const = 0;
  virtual UpscaleResult run(const PlanarImage& lr, int scale) = 0;
  // Drops any persistent state (e.g. a crashed server child).
  virtual void reset() {}
};

struct RunnerOptions {
  // Where per-call PNG files live; defaults to $SRBENCH_TMPDIR or the
  // system temp directory.
  std::filesystem::path temp_root;
  std::string device_label;
};

std::filesystem::path default_temp_root();

std::unique_ptr<Upscaler> make_upscaler(const ModelConfig& config, RunnerOptions options = {});

// Checks the scale against the config and the output size against the
// dimension contract, naming the model in any error.
UpscaleResult upscale(Upscaler& model, const PlanarImage& lr, int scale);

}  // namespace srbench::runtime
