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
#include <filesystem>
#include <vector>

#include "srbench/image.h"

namespace srbench {

// Reads an 8-bit gray, gray+alpha, RGB, RGBA or palette PNG. Alpha is
// dropped. 16-bit files are rejected.
PlanarImage load_png(const std::filesystem::path& path);
PlanarImage decode_png(const std::vector<std::uint8_t>& bytes);

// Quantizes and writes an 8-bit PNG (gray for 1 channel, RGB otherwise).
// YCbCr images are stored as-is, plane for plane; callers convert first.
void save_png(const PlanarImage& img, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_png(const PlanarImage& img);

}  // namespace srbench
