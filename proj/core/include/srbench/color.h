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

namespace srbench {

// BT.601 studio-swing conversion (MATLAB rgb2ycbcr convention) on the
// [0, 255] scale. No rounding is applied.
PlanarImage rgb_to_ycbcr(const PlanarImage& img);

// Single-channel Y plane. RGB input is converted first, gray input is
// rejected since its luma convention is unknown.
PlanarImage extract_y(const PlanarImage& img);

// Y (or the gray plane itself) for single-channel consumers such as NIQE.
PlanarImage luma_or_gray(const PlanarImage& img);

}  // namespace srbench
