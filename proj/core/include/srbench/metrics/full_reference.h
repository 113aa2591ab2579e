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

#include "srbench/image.h"
#include "srbench/metrics/metric_result.h"

namespace srbench::metrics {

// Removes `amount` pixels from every border. Requires 2*amount < min(w, h).
PlanarImage shave(const PlanarImage& img, int amount);

// 10*log10(255^2 / MSE) over every sample of every channel. MAX stays 255 in
// float precision because samples live on the [0, 255] scale.
MetricResult psnr(const PlanarImage& reference, const PlanarImage& output);

// Mean squared error over all samples; shared by PSNR and custom evaluators.
double mean_squared_error(const PlanarImage& reference, const PlanarImage& output);

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
  // Box-filter and decimate by max(1, round(min(h, w) / 256)) first, as the
  // reference ssim.m does.
  bool auto_downsample = true;

  double c1() const noexcept { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const noexcept { return (k2 * dynamic_range) * (k2 * dynamic_range); }
};

// Downsampling factor applied when auto_downsample is on.
int ssim_downsample_factor(int width, int height);

// Mean SSIM over the valid (unpadded) window positions of two
// single-channel images.
MetricResult ssim(const PlanarImage& reference, const PlanarImage& output,
                  const SsimParams& params = {});

}  // namespace srbench::metrics
