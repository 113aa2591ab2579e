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

#include "srbench/color.h"

#include "srbench/error.h"

namespace srbench {

PlanarImage rgb_to_ycbcr(const PlanarImage& img) {
  if (img.colorspace() != ColorSpace::kRgb) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("rgb_to_ycbcr expects an RGB image, got ") +
                    std::string(to_string(img.colorspace())));
  }
  PlanarImage out(img.width(), img.height(), ColorSpace::kYCbCr);
  auto r = img.plane(0);
  auto g = img.plane(1);
  auto b = img.plane(2);
  auto y = out.plane(0);
  auto cb = out.plane(1);
  auto cr = out.plane(2);
  for (std::size_t i = 0; i < r.size(); ++i) {
    y[i] = 16.0 + (65.481 * r[i] + 128.553 * g[i] + 24.966 * b[i]) / 255.0;
    cb[i] = 128.0 + (-37.797 * r[i] - 74.203 * g[i] + 112.0 * b[i]) / 255.0;
    cr[i] = 128.0 + (112.0 * r[i] - 93.786 * g[i] - 18.214 * b[i]) / 255.0;
  }
  return out;
}

PlanarImage extract_y(const PlanarImage& img) {
  switch (img.colorspace()) {
    case ColorSpace::kYCbCr: {
      auto y = img.plane(0);
      return PlanarImage(img.width(), img.height(), ColorSpace::kGray,
                         std::vector<double>(y.begin(), y.end()));
    }
    case ColorSpace::kRgb:
      return extract_y(rgb_to_ycbcr(img));
    case ColorSpace::kGray:
      break;
  }
  throw Error(ErrorKind::kInvalidArgument, "extract_y expects an RGB or YCbCr image");
}

PlanarImage luma_or_gray(const PlanarImage& img) {
  return img.colorspace() == ColorSpace::kGray ? img : extract_y(img);
}

}  // namespace srbench
