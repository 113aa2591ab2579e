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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace srbench {

enum class ColorSpace { kRgb, kYCbCr, kGray };

std::string_view to_string(ColorSpace cs);

// Integer8 quantizes samples to {0..255} before metrics; Float leaves the
// carrier untouched.
enum class PrecisionMode { kInteger8, kFloat };

std::string_view to_string(PrecisionMode mode);

// Planar 64-bit float image with samples in the nominal range [0, 255].
// Plane c occupies data()[c*w*h, (c+1)*w*h), rows stored top to bottom.
class PlanarImage {
 public:
  PlanarImage(int width, int height, ColorSpace colorspace, double fill = 0.0);
  PlanarImage(int width, int height, ColorSpace colorspace,
              std::vector<double> data);

  static PlanarImage gray(int width, int height, double fill = 0.0) {
    return PlanarImage(width, height, ColorSpace::kGray, fill);
  }
  static PlanarImage rgb(int width, int height, double fill = 0.0) {
    return PlanarImage(width, height, ColorSpace::kRgb, fill);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return colorspace_ == ColorSpace::kGray ? 1 : 3; }
  ColorSpace colorspace() const noexcept { return colorspace_; }
  std::size_t plane_size() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  std::span<double> plane(int c);
  std::span<const double> plane(int c) const;
  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  double& at(int c, int y, int x) {
    return data_[static_cast<std::size_t>(c) * plane_size() +
                 static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int c, int y, int x) const {
    return data_[static_cast<std::size_t>(c) * plane_size() +
                 static_cast<std::size_t>(y) * width_ + x];
  }

  // Returns a copy whose colorspace tag is replaced; channel count must match.
  PlanarImage relabeled(ColorSpace colorspace) const;

  friend bool operator==(const PlanarImage&, const PlanarImage&) = default;

 private:
  int width_;
  int height_;
  ColorSpace colorspace_;
  std::vector<double> data_;
};

// Clip to [0, 255] then round half away from zero. Idempotent.
double quantize_sample(double v) noexcept;
PlanarImage quantize(const PlanarImage& img);
PlanarImage apply_precision(const PlanarImage& img, PrecisionMode mode);

// Copies the rectangle [x, x+w) x [y, y+h).
PlanarImage crop(const PlanarImage& img, int x, int y, int w, int h);

// Largest centered crop whose dimensions are multiples of `multiple`.
struct CropRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
  friend bool operator==(const CropRect&, const CropRect&) = default;
};
CropRect center_crop_rect(int width, int height, int multiple);

// Geometric transforms used by self-ensemble. rot90 is counter-clockwise.
PlanarImage flip_horizontal(const PlanarImage& img);
PlanarImage rotate90_ccw(const PlanarImage& img, int quarter_turns = 1);

}  // namespace srbench
