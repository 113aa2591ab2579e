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

#include "srbench/metrics/full_reference.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "srbench/error.h"
#include "srbench/filter.h"

namespace srbench::metrics {

std::string_view to_string(MetricStatus status) {
  switch (status) {
    case MetricStatus::kOk: return "ok";
    case MetricStatus::kInfinite: return "infinite";
    case MetricStatus::kUndefined: return "undefined";
  }
  return "undefined";
}

MetricStatus parse_metric_status(std::string_view text) {
  if (text == "ok") return MetricStatus::kOk;
  if (text == "infinite") return MetricStatus::kInfinite;
  if (text == "undefined") return MetricStatus::kUndefined;
  throw Error(ErrorKind::kFormat, fmt::format("unknown metric status '{}'", text));
}

namespace {

void require_same_shape(const PlanarImage& a, const PlanarImage& b, std::string_view what) {
  if (a.width() != b.width() || a.height() != b.height() || a.channels() != b.channels()) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("{}: dimension mismatch {}x{}x{} vs {}x{}x{}", what, a.width(),
                            a.height(), a.channels(), b.width(), b.height(), b.channels()));
  }
}

std::vector<double> box_downsample(std::span<const double> plane, int w, int h, int f) {
  const std::vector<double> box(f, 1.0 / f);
  const auto filtered = correlate_same(plane, w, h, box, box, Border::kSymmetric);
  const int ow = (w + f - 1) / f;
  const int oh = (h + f - 1) / f;
  std::vector<double> out(static_cast<std::size_t>(ow) * oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      out[static_cast<std::size_t>(y) * ow + x] =
          filtered[static_cast<std::size_t>(y * f) * w + x * f];
    }
  }
  return out;
}

}  // namespace

PlanarImage shave(const PlanarImage& img, int amount) {
  if (amount < 0) {
    throw Error(ErrorKind::kInvalidArgument, fmt::format("negative shave amount {}", amount));
  }
  if (2 * amount >= std::min(img.width(), img.height())) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("cannot shave {} pixels from a {}x{} image", amount, img.width(),
                            img.height()));
  }
  if (amount == 0) return img;
  return crop(img, amount, amount, img.width() - 2 * amount, img.height() - 2 * amount);
}

double mean_squared_error(const PlanarImage& reference, const PlanarImage& output) {
  require_same_shape(reference, output, "mse");
  const auto a = reference.data();
  const auto b = output.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

MetricResult psnr(const PlanarImage& reference, const PlanarImage& output) {
  require_same_shape(reference, output, "psnr");
  const double mse = mean_squared_error(reference, output);
  if (mse == 0.0) {
    return {"psnr", std::numeric_limits<double>::infinity(), MetricStatus::kInfinite};
  }
  return {"psnr", 10.0 * std::log10(255.0 * 255.0 / mse), MetricStatus::kOk};
}

int ssim_downsample_factor(int width, int height) {
  return std::max(1, static_cast<int>(std::lround(std::min(width, height) / 256.0)));
}

MetricResult ssim(const PlanarImage& reference, const PlanarImage& output,
                  const SsimParams& params) {
  require_same_shape(reference, output, "ssim");
  if (reference.channels() != 1) {
    throw Error(ErrorKind::kInvalidArgument, "ssim expects single-channel images");
  }
  int w = reference.width();
  int h = reference.height();
  std::vector<double> a(reference.data().begin(), reference.data().end());
  std::vector<double> b(output.data().begin(), output.data().end());

  if (params.auto_downsample) {
    const int f = ssim_downsample_factor(w, h);
    if (f > 1) {
      a = box_downsample(a, w, h, f);
      b = box_downsample(b, w, h, f);
      w = (w + f - 1) / f;
      h = (h + f - 1) / f;
    }
  }
  if (w < params.window || h < params.window) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("ssim: {}x{} image is smaller than the {}x{} window", w, h,
                            params.window, params.window));
  }

  const auto g = gaussian_kernel(params.window, params.sigma);
  std::vector<double> aa(a.size());
  std::vector<double> bb(a.size());
  std::vector<double> ab(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    aa[i] = a[i] * a[i];
    bb[i] = b[i] * b[i];
    ab[i] = a[i] * b[i];
  }
  const auto mu1 = correlate_valid(a, w, h, g, g);
  const auto mu2 = correlate_valid(b, w, h, g, g);
  const auto e11 = correlate_valid(aa, w, h, g, g);
  const auto e22 = correlate_valid(bb, w, h, g, g);
  const auto e12 = correlate_valid(ab, w, h, g, g);

  const double c1 = params.c1();
  const double c2 = params.c2();
  double sum = 0.0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    const double mu1_sq = mu1[i] * mu1[i];
    const double mu2_sq = mu2[i] * mu2[i];
    const double mu12 = mu1[i] * mu2[i];
    const double s1 = e11[i] - mu1_sq;
    const double s2 = e22[i] - mu2_sq;
    const double s12 = e12[i] - mu12;
    sum += ((2.0 * mu12 + c1) * (2.0 * s12 + c2)) / ((mu1_sq + mu2_sq + c1) * (s1 + s2 + c2));
  }
  return {"ssim", sum / static_cast<double>(mu1.size()), MetricStatus::kOk};
}

}  // namespace srbench::metrics
