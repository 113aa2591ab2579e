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

#include <array>

#include "srbench/image.h"
#include "srbench/runtime/upscaler.h"

namespace srbench::runtime {

// One element of the 8-element dihedral group: horizontal flip (optional)
// followed by `rotation` counter-clockwise quarter turns.
struct GeometricTransform {
  bool flip = false;
  int rotation = 0;

  PlanarImage apply(const PlanarImage& img) const;
  PlanarImage invert(const PlanarImage& img) const;
};

std::array<GeometricTransform, 8> ensemble_transforms();

// Mean over all eight T^-1(model(T(lr))). Branch outputs stay in float and
// are summed pairwise, so eight identical branches reproduce the branch
// exactly. The timing covers the model calls plus the transforms and
// averaging, but not the runner's file exchange.
UpscaleResult self_ensemble(Upscaler& model, const PlanarImage& lr, int scale);

// upscale() or self_ensemble() depending on `ensemble`.
UpscaleResult run_model(Upscaler& model, const PlanarImage& lr, int scale, bool ensemble);

}  // namespace srbench::runtime
