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

#include <string_view>
#include <vector>

#include "srbench/image.h"

namespace srbench {

enum class KernelKind { kNearest, kBilinear, kBicubic };

std::string_view to_string(KernelKind kind);

// Half-width of each kernel in source pixels at unit scale.
double kernel_support(KernelKind kind) noexcept;

// Kernel value at offset x (in source pixels, unstretched). Bicubic is the
// Keys cubic with a = -0.5; nearest is the half-open box [-0.5, 0.5).
double kernel_weight(KernelKind kind, double x) noexcept;

// Contributions of source samples to one output coordinate. Indices are
// already clamped to the source range and weights sum to 1.
struct Contribution {
  std::vector<int> index;
  std::vector<double> weight;
};

// One entry per output coordinate. `scale` is out_size / in_size. When
// antialias is set and scale < 1, the kernel is stretched by 1/scale.
std::vector<Contribution> resample_contributions(int in_size, int out_size,
                                                 KernelKind kind, bool antialias);

// Separable resize, horizontal pass first. Edges clamp.
PlanarImage resize(const PlanarImage& img, int out_width, int out_height, KernelKind kind,
                   bool antialias = true);

// Center-crops to a multiple of `scale`, then bicubic-antialias downscales
// and quantizes the result to 8-bit values.
PlanarImage downscale_hr(const PlanarImage& hr, int scale);

}  // namespace srbench
