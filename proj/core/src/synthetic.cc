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

#include "srbench/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "srbench/error.h"
#include "srbench/filter.h"

namespace srbench::synthetic {

namespace {

// mt19937_64 output is fully specified; the distributions are not, so the
// mapping to [0, 1) is done here.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_size(int width, int height) {
  if (width <= 0 || height <= 0) throw Error(ErrorKind::kInvalidArgument, "synthetic image size must be positive");
}

}  // namespace

PlanarImage gradient(int width, int height, std::uint64_t seed) {
  check_size(width, height);
  std::mt19937_64 rng(seed);
  PlanarImage img(width, height, ColorSpace::kRgb);
  for (int c = 0; c < 3; ++c) {
    const double a = 40 + 60 * unit(rng);
    const double bx = (unit(rng) - 0.5) * 160;
    const double by = (unit(rng) - 0.5) * 160;
    const double q = (unit(rng) - 0.5) * 120;
    for (int y = 0; y < height; ++y) {
      const double v = static_cast<double>(y) / std::max(1, height - 1);
      for (int x = 0; x < width; ++x) {
        const double u = static_cast<double>(x) / std::max(1, width - 1);
        const double value = a + 70 + bx * u + by * v + q * (u - 0.5) * (v - 0.5);
        img.at(c, y, x) = std::clamp(value, 0.0, 255.0);
      }
    }
  }
  return quantize(img);
}

PlanarImage texture(int width, int height, std::uint64_t seed, int components) {
  check_size(width, height);
  std::mt19937_64 rng(seed);
  const double fmin = 1.0;
  const double fmax = std::max(2.0, std::min(width, height) / 3.0);
  struct Wave {
    double kx, ky, phase, amp;
    double tint[3];
  };
  std::vector<Wave> waves(static_cast<std::size_t>(components));
  for (auto& w : waves) {
    const double f = fmin * std::pow(fmax / fmin, unit(rng));
    const double theta = unit(rng) * std::numbers::pi;
    w.kx = 2 * std::numbers::pi * f * std::cos(theta) / width;
    w.ky = 2 * std::numbers::pi * f * std::sin(theta) / height;
    w.phase = unit(rng) * 2 * std::numbers::pi;
    w.amp = 1.0 / f;
    for (double& t : w.tint) t = 0.7 + 0.6 * unit(rng);
  }
  PlanarImage img(width, height, ColorSpace::kRgb);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (const auto& w : waves) {
        // Squaring a sinusoid's positive part gives sharper, edge-like crests.
        const double s = std::sin(w.kx * x + w.ky * y + w.phase);
        const double v = w.amp * (s > 0 ? s * s : -0.5 * s * s);
        for (int c = 0; c < 3; ++c) img.at(c, y, x) += v * w.tint[c];
      }
    }
  }
  for (int c = 0; c < 3; ++c) {
    auto plane = img.plane(c);
    const auto [lo, hi] = std::minmax_element(plane.begin(), plane.end());
    const double min = *lo;
    const double range = std::max(1e-12, *hi - min);
    for (double& v : plane) v = 16.0 + 223.0 * (v - min) / range;
  }
  return quantize(img);
}

PlanarImage blur(const PlanarImage& img, double sigma) {
  const int size = 2 * static_cast<int>(std::ceil(3 * sigma)) + 1;
  const auto kernel = gaussian_kernel(size, sigma);
  PlanarImage out(img.width(), img.height(), img.colorspace());
  for (int c = 0; c < img.channels(); ++c) {
    auto filtered = correlate_same(img.plane(c), img.width(), img.height(), kernel, kernel, Border::kReplicate);
    std::copy(filtered.begin(), filtered.end(), out.plane(c).begin());
  }
  return out;
}

}  // namespace srbench::synthetic
