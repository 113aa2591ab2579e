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

#include "srbench/resample.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "srbench/error.h"

namespace srbench {

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kNearest: return "nearest";
    case KernelKind::kBilinear: return "bilinear";
    case KernelKind::kBicubic: return "bicubic";
  }
  return "unknown";
}

double kernel_support(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::kNearest: return 0.5;
    case KernelKind::kBilinear: return 1.0;
    case KernelKind::kBicubic: return 2.0;
  }
  return 0.0;
}

double kernel_weight(KernelKind kind, double x) noexcept {
  switch (kind) {
    case KernelKind::kNearest:
      return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0;
    case KernelKind::kBilinear: {
      const double ax = std::abs(x);
      return ax < 1.0 ? 1.0 - ax : 0.0;
    }
    case KernelKind::kBicubic: {
      constexpr double a = -0.5;
      const double ax = std::abs(x);
      const double ax2 = ax * ax;
      const double ax3 = ax2 * ax;
      if (ax <= 1.0) return (a + 2.0) * ax3 - (a + 3.0) * ax2 + 1.0;
      if (ax < 2.0) return a * ax3 - 5.0 * a * ax2 + 8.0 * a * ax - 4.0 * a;
      return 0.0;
    }
  }
  return 0.0;
}

std::vector<Contribution> resample_contributions(int in_size, int out_size,
                                                 KernelKind kind, bool antialias) {
  if (in_size < 1 || out_size < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("resample sizes must be positive ({} -> {})", in_size, out_size));
  }
  const double scale = static_cast<double>(out_size) / in_size;
  const bool stretch = antialias && scale < 1.0;
  const double kscale = stretch ? scale : 1.0;
  const double width = kernel_support(kind) / kscale;

  std::vector<Contribution> contribs(out_size);
  for (int i = 0; i < out_size; ++i) {
    const double center = (i + 0.5) / scale - 0.5;
    const int first = static_cast<int>(std::ceil(center - width));
    const int last = static_cast<int>(std::floor(center + width));
    Contribution& c = contribs[i];
    double sum = 0.0;
    for (int j = first; j <= last; ++j) {
      const double w = kernel_weight(kind, (center - j) * kscale);
      if (w == 0.0) continue;
      c.index.push_back(std::clamp(j, 0, in_size - 1));
      c.weight.push_back(w);
      sum += w;
    }
    if (c.index.empty() || sum == 0.0) {
      c.index.assign(1, std::clamp(static_cast<int>(std::lround(center)), 0, in_size - 1));
      c.weight.assign(1, 1.0);
      continue;
    }
    for (double& w : c.weight) w /= sum;
  }
  return contribs;
}

PlanarImage resize(const PlanarImage& img, int out_width, int out_height, KernelKind kind,
                   bool antialias) {
  if (out_width < 1 || out_height < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("resize to zero-size output {}x{}", out_width, out_height));
  }
  const auto hc = resample_contributions(img.width(), out_width, kind, antialias);
  const auto vc = resample_contributions(img.height(), out_height, kind, antialias);

  PlanarImage tmp(out_width, img.height(), img.colorspace());
  PlanarImage out(out_width, out_height, img.colorspace());
  for (int c = 0; c < img.channels(); ++c) {
    const auto src = img.plane(c);
    auto mid = tmp.plane(c);
    for (int y = 0; y < img.height(); ++y) {
      const double* row = src.data() + static_cast<std::size_t>(y) * img.width();
      double* dst = mid.data() + static_cast<std::size_t>(y) * out_width;
      for (int x = 0; x < out_width; ++x) {
        const Contribution& k = hc[x];
        double acc = 0.0;
        for (std::size_t t = 0; t < k.index.size(); ++t) acc += k.weight[t] * row[k.index[t]];
        dst[x] = acc;
      }
    }
    auto dst = out.plane(c);
    for (int y = 0; y < out_height; ++y) {
      const Contribution& k = vc[y];
      double* drow = dst.data() + static_cast<std::size_t>(y) * out_width;
      std::fill(drow, drow + out_width, 0.0);
      for (std::size_t t = 0; t < k.index.size(); ++t) {
        const double w = k.weight[t];
        const double* srow = mid.data() + static_cast<std::size_t>(k.index[t]) * out_width;
        for (int x = 0; x < out_width; ++x) drow[x] += w * srow[x];
      }
    }
  }
  return out;
}

PlanarImage downscale_hr(const PlanarImage& hr, int scale) {
  if (scale < 1) {
    throw Error(ErrorKind::kInvalidArgument, fmt::format("invalid scale {}", scale));
  }
  const CropRect r = center_crop_rect(hr.width(), hr.height(), scale);
  const PlanarImage cropped = crop(hr, r.x, r.y, r.width, r.height);
  return quantize(resize(cropped, r.width / scale, r.height / scale, KernelKind::kBicubic, true));
}

}  // namespace srbench
