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

#include "srbench/filter.h"

#include <algorithm>
#include <cmath>

#include "srbench/error.h"

namespace srbench {
namespace {

int pad_index(int i, int n, Border border) {
  if (border == Border::kReplicate) return std::clamp(i, 0, n - 1);
  // Symmetric reflection with period 2n.
  const int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

}  // namespace

std::vector<double> gaussian_kernel(int size, double sigma) {
  if (size < 1 || !(sigma > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "gaussian kernel needs size >= 1 and sigma > 0");
  }
  std::vector<double> k(size);
  const double half = (size - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double x = i - half;
    k[i] = std::exp(-(x * x) / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

std::vector<double> correlate_same(std::span<const double> plane, int width, int height,
                                   std::span<const double> kx, std::span<const double> ky,
                                   Border border) {
  const int kw = static_cast<int>(kx.size());
  const int kh = static_cast<int>(ky.size());
  const int ox = -(kw - 1) / 2;
  const int oy = -(kh - 1) / 2;

  std::vector<double> tmp(plane.size());
  for (int y = 0; y < height; ++y) {
    const double* row = plane.data() + static_cast<std::size_t>(y) * width;
    double* dst = tmp.data() + static_cast<std::size_t>(y) * width;
    for (int x = 0; x < width; ++x) {
      double acc = 0.0;
      for (int t = 0; t < kw; ++t) acc += kx[t] * row[pad_index(x + ox + t, width, border)];
      dst[x] = acc;
    }
  }
  std::vector<double> out(plane.size(), 0.0);
  for (int y = 0; y < height; ++y) {
    double* dst = out.data() + static_cast<std::size_t>(y) * width;
    for (int t = 0; t < kh; ++t) {
      const double w = ky[t];
      const double* src =
          tmp.data() + static_cast<std::size_t>(pad_index(y + oy + t, height, border)) * width;
      for (int x = 0; x < width; ++x) dst[x] += w * src[x];
    }
  }
  return out;
}

std::vector<double> correlate_valid(std::span<const double> plane, int width, int height,
                                    std::span<const double> kx, std::span<const double> ky) {
  const int kw = static_cast<int>(kx.size());
  const int kh = static_cast<int>(ky.size());
  const int ow = width - kw + 1;
  const int oh = height - kh + 1;
  if (ow < 1 || oh < 1) {
    throw Error(ErrorKind::kInvalidArgument, "image smaller than filter window");
  }
  std::vector<double> tmp(static_cast<std::size_t>(ow) * height);
  for (int y = 0; y < height; ++y) {
    const double* row = plane.data() + static_cast<std::size_t>(y) * width;
    double* dst = tmp.data() + static_cast<std::size_t>(y) * ow;
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < kw; ++t) acc += kx[t] * row[x + t];
      dst[x] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ow) * oh, 0.0);
  for (int y = 0; y < oh; ++y) {
    double* dst = out.data() + static_cast<std::size_t>(y) * ow;
    for (int t = 0; t < kh; ++t) {
      const double w = ky[t];
      const double* src = tmp.data() + static_cast<std::size_t>(y + t) * ow;
      for (int x = 0; x < ow; ++x) dst[x] += w * src[x];
    }
  }
  return out;
}

}  // namespace srbench
