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

#include "srbench/image.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "srbench/error.h"

namespace srbench {

std::string_view to_string(ColorSpace cs) {
  switch (cs) {
    case ColorSpace::kRgb: return "rgb";
    case ColorSpace::kYCbCr: return "ycbcr";
    case ColorSpace::kGray: return "gray";
  }
  return "unknown";
}

std::string_view to_string(PrecisionMode mode) {
  return mode == PrecisionMode::kInteger8 ? "integer8" : "float";
}

namespace {

int channel_count(ColorSpace cs) { return cs == ColorSpace::kGray ? 1 : 3; }

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("image dimensions must be positive, got {}x{}", width, height));
  }
}

}  // namespace

PlanarImage::PlanarImage(int width, int height, ColorSpace colorspace, double fill)
    : width_(width), height_(height), colorspace_(colorspace) {
  check_dims(width, height);
  data_.assign(plane_size() * channel_count(colorspace), fill);
}

PlanarImage::PlanarImage(int width, int height, ColorSpace colorspace,
                         std::vector<double> data)
    : width_(width), height_(height), colorspace_(colorspace), data_(std::move(data)) {
  check_dims(width, height);
  if (data_.size() != plane_size() * channel_count(colorspace)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("image data has {} samples, expected {}", data_.size(),
                            plane_size() * channel_count(colorspace)));
  }
}

std::span<double> PlanarImage::plane(int c) {
  return std::span<double>(data_).subspan(c * plane_size(), plane_size());
}

std::span<const double> PlanarImage::plane(int c) const {
  return std::span<const double>(data_).subspan(c * plane_size(), plane_size());
}

PlanarImage PlanarImage::relabeled(ColorSpace colorspace) const {
  return PlanarImage(width_, height_, colorspace, data_);
}

double quantize_sample(double v) noexcept {
  // NaN maps to 0 rather than propagating into integer storage.
  if (!(v > 0.0)) return 0.0;
  if (v >= 255.0) return 255.0;
  return std::round(v);
}

PlanarImage quantize(const PlanarImage& img) {
  PlanarImage out = img;
  for (double& v : out.data()) v = quantize_sample(v);
  return out;
}

PlanarImage apply_precision(const PlanarImage& img, PrecisionMode mode) {
  return mode == PrecisionMode::kInteger8 ? quantize(img) : img;
}

PlanarImage crop(const PlanarImage& img, int x, int y, int w, int h) {
  if (x < 0 || y < 0 || w < 1 || h < 1 || x + w > img.width() || y + h > img.height()) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("crop {}x{}+{}+{} outside {}x{} image", w, h, x, y, img.width(),
                            img.height()));
  }
  PlanarImage out(w, h, img.colorspace());
  for (int c = 0; c < img.channels(); ++c) {
    for (int r = 0; r < h; ++r) {
      const double* src = img.plane(c).data() + static_cast<std::size_t>(y + r) * img.width() + x;
      std::copy(src, src + w, out.plane(c).data() + static_cast<std::size_t>(r) * w);
    }
  }
  return out;
}

CropRect center_crop_rect(int width, int height, int multiple) {
  if (multiple < 1) {
    throw Error(ErrorKind::kInvalidArgument, "crop multiple must be >= 1");
  }
  if (width < multiple || height < multiple) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("{}x{} image is smaller than scale {}", width, height, multiple));
  }
  CropRect r;
  r.width = width / multiple * multiple;
  r.height = height / multiple * multiple;
  r.x = (width - r.width) / 2;
  r.y = (height - r.height) / 2;
  return r;
}

PlanarImage flip_horizontal(const PlanarImage& img) {
  PlanarImage out(img.width(), img.height(), img.colorspace());
  const int w = img.width();
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < w; ++x) out.at(c, y, x) = img.at(c, y, w - 1 - x);
    }
  }
  return out;
}

PlanarImage rotate90_ccw(const PlanarImage& img, int quarter_turns) {
  quarter_turns = ((quarter_turns % 4) + 4) % 4;
  if (quarter_turns == 0) return img;
  const int w = img.width();
  const int h = img.height();
  if (quarter_turns == 2) {
    PlanarImage out(w, h, img.colorspace());
    for (int c = 0; c < img.channels(); ++c) {
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) out.at(c, y, x) = img.at(c, h - 1 - y, w - 1 - x);
      }
    }
    return out;
  }
  PlanarImage out(h, w, img.colorspace());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < w; ++y) {
      for (int x = 0; x < h; ++x) {
        // Counter-clockwise: the top row of the input becomes the left column.
        out.at(c, y, x) = quarter_turns == 1 ? img.at(c, x, w - 1 - y)
                                             : img.at(c, h - 1 - x, y);
      }
    }
  }
  return out;
}

}  // namespace srbench
