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

#include "srbench/runtime/timing.h"

#include <fmt/format.h>

#include "srbench/error.h"
#include "srbench/runtime/ensemble.h"

namespace srbench::runtime {

TimingReport benchmark_timing(Upscaler& model, std::span<const PlanarImage> images, int scale,
                              const TimingOptions& options) {
  if (options.repeats < 1) {
    throw Error(ErrorKind::kInvalidArgument, "timing needs at least one repeat");
  }
  if (options.warmup < 0) {
    throw Error(ErrorKind::kInvalidArgument, "warmup count must be >= 0");
  }
  if (options.warmup < 1 && model.config().runner.kind == RunnerKind::kServer) {
    throw Error(ErrorKind::kInvalidArgument, "server runners need at least one warmup pass");
  }
  TimingReport report;
  if (images.empty()) return report;
  try {
    for (int i = 0; i < options.warmup; ++i) {
      run_model(model, images.front(), scale, options.self_ensemble);
    }
    for (const PlanarImage& img : images) {
      std::vector<double> passes;
      TimingSample mean;
      for (int r = 0; r < options.repeats; ++r) {
        const TimingSample t = run_model(model, img, scale, options.self_ensemble).timing;
        passes.push_back(t.wall_seconds);
        mean.wall_seconds += t.wall_seconds;
        mean.raw_seconds += t.raw_seconds;
        mean.overhead_seconds += t.overhead_seconds;
        mean.startup_inclusive = t.startup_inclusive;
        mean.device_label = t.device_label;
      }
      mean.wall_seconds /= options.repeats;
      mean.raw_seconds /= options.repeats;
      mean.overhead_seconds /= options.repeats;
      report.samples.push_back(mean);
      report.raw.push_back(std::move(passes));
    }
  } catch (const Error& e) {
    report.valid = false;
    report.error = fmt::format("timing aborted after {} of {} images: {}", report.samples.size(),
                               images.size(), e.what());
  }
  return report;
}

}  // namespace srbench::runtime
