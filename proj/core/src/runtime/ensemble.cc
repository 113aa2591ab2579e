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

#include "srbench/runtime/ensemble.h"

#include <chrono>

namespace srbench::runtime {

PlanarImage GeometricTransform::apply(const PlanarImage& img) const {
  return rotate90_ccw(flip ? flip_horizontal(img) : img, rotation);
}

PlanarImage GeometricTransform::invert(const PlanarImage& img) const {
  PlanarImage back = rotate90_ccw(img, -rotation);
  return flip ? flip_horizontal(back) : back;
}

std::array<GeometricTransform, 8> ensemble_transforms() {
  std::array<GeometricTransform, 8> t;
  for (int i = 0; i < 8; ++i) t[i] = {i >= 4, i % 4};
  return t;
}

UpscaleResult self_ensemble(Upscaler& model, const PlanarImage& lr, int scale) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  Clock::duration inside_calls{};
  double model_seconds = 0.0;
  double raw_seconds = 0.0;
  double overhead_seconds = 0.0;

  std::vector<PlanarImage> branches;
  branches.reserve(8);
  TimingSample last;
  for (const GeometricTransform& t : ensemble_transforms()) {
    const PlanarImage input = t.apply(lr);
    const auto c0 = Clock::now();
    UpscaleResult r = upscale(model, input, scale);
    inside_calls += Clock::now() - c0;
    model_seconds += r.timing.wall_seconds;
    raw_seconds += r.timing.raw_seconds;
    overhead_seconds += r.timing.overhead_seconds;
    last = r.timing;
    branches.push_back(t.invert(r.image));
  }

  // ((b0+b1)+(b2+b3)) + ((b4+b5)+(b6+b7)), then / 8.
  for (std::size_t stride = 1; stride < branches.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < branches.size(); i += 2 * stride) {
      auto dst = branches[i].data();
      const auto src = branches[i + stride].data();
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
    }
  }
  PlanarImage out = std::move(branches[0]);
  for (double& v : out.data()) v /= 8.0;

  const double harness = std::chrono::duration<double>(Clock::now() - start - inside_calls).count();
  TimingSample timing = last;
  timing.wall_seconds = model_seconds + harness;
  timing.raw_seconds = raw_seconds + harness;
  timing.overhead_seconds = overhead_seconds;
  return {std::move(out), timing};
}

UpscaleResult run_model(Upscaler& model, const PlanarImage& lr, int scale, bool ensemble) {
  return ensemble ? self_ensemble(model, lr, scale) : upscale(model, lr, scale);
}

}  // namespace srbench::runtime
