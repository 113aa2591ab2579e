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

#include <cstdint>

#include "srbench/image.h"

namespace srbench::synthetic {

// Smooth RGB ramp: each channel is a different low-order polynomial of the
// pixel position, so bicubic interpolation tracks it far better than nearest.
PlanarImage gradient(int width, int height, std::uint64_t seed);

// RGB texture with a 1/f amplitude spectrum built from random oriented
// sinusoids. Rich in edges at every scale, which makes it a usable stand-in
// for natural images when fitting a NIQE pristine model.
PlanarImage texture(int width, int height, std::uint64_t seed, int components = 48);

// Gaussian blur with replicate borders; values stay unquantized.
PlanarImage blur(const PlanarImage& img, double sigma);

}  // namespace srbench::synthetic
