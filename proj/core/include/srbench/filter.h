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

#include <span>
#include <vector>

namespace srbench {

// Padding used by "same"-size correlation. Symmetric mirrors including the
// edge sample (a b c | c b a), replicate repeats the edge sample.
enum class Border { kReplicate, kSymmetric };

// Sampled Gaussian of odd or even length, normalized to sum to 1.
std::vector<double> gaussian_kernel(int size, double sigma);

// Separable correlation producing a width x height result. For even kernel
// lengths the anchor follows the MATLAB imfilter convention.
std::vector<double> correlate_same(std::span<const double> plane, int width, int height,
                                   std::span<const double> kx, std::span<const double> ky,
                                   Border border);

// Separable correlation over fully-covered positions only. The result is
// (width - kx.size() + 1) x (height - ky.size() + 1).
std::vector<double> correlate_valid(std::span<const double> plane, int width, int height,
                                    std::span<const double> kx, std::span<const double> ky);

}  // namespace srbench
