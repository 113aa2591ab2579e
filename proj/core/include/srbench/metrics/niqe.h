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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "srbench/image.h"
#include "srbench/metrics/metric_result.h"

namespace srbench::metrics {

// Natural Image Quality Evaluator.
//
// Each image is split into non-overlapping patch_size x patch_size tiles.
// For every tile, 18 natural-scene statistics are measured on the
// mean-subtracted contrast-normalized (MSCN) field at full resolution and
// again on a half-resolution copy:
//
//   [0..1]   GGD fit of the MSCN coefficients: shape, variance
//   [2..17]  AGGD fit of the four neighbour products (horizontal, vertical,
//            main diagonal, anti-diagonal): shape, mean, left var, right var
//
// Tiles whose mean local deviation falls below sharpness_fraction times the
// sharpest tile are dropped. The score is the Mahalanobis-like distance
// between the pooled tile statistics and a pristine model:
//
//   sqrt((m1 - m2)^T pinv((C1 + C2) / 2) (m1 - m2))
inline constexpr int kNiqeFeaturesPerScale = 18;
inline constexpr int kNiqeFeatureCount = 2 * kNiqeFeaturesPerScale;
inline constexpr int kNiqeModelVersion = 1;

using NiqeFeatureVector = std::array<double, kNiqeFeatureCount>;

struct NiqePristineModel {
  std::vector<double> mean;        // kNiqeFeatureCount entries
  std::vector<double> covariance;  // row-major kNiqeFeatureCount^2 entries
  int patch_size = 96;
  double sharpness_fraction = 0.75;
  std::string description;

  void validate() const;
};

struct GgdParams {
  double shape = 0.0;
  double variance = 0.0;
};

struct AggdParams {
  double shape = 0.0;
  double left_sigma = 0.0;
  double right_sigma = 0.0;
  // Mean of the fitted distribution; zero for a symmetric fit.
  double mean() const;
};

// Moment-matching fits. The shape is looked up in a table of
// Gamma(2/a)^2 / (Gamma(1/a) Gamma(3/a)) over a in [0.2, 10] step 0.001.
GgdParams fit_ggd(std::span<const double> samples);
AggdParams fit_aggd(std::span<const double> samples);

// MSCN field (I - mu) / (sigma + 1) with 7x7 Gaussian (sigma 7/6) local
// statistics and replicate padding. `local_sigma`, if given, receives sigma.
std::vector<double> mscn(std::span<const double> plane, int width, int height,
                         std::vector<double>* local_sigma = nullptr);

struct NiqePatch {
  NiqeFeatureVector features{};
  double sharpness = 0.0;
};

// All tiles of a single-channel image, before sharpness selection. Requires
// the image to be at least 2*patch_size in each dimension.
std::vector<NiqePatch> niqe_patches(const PlanarImage& img, int patch_size);

// Tiles kept by the sharpness rule that also have finite features. Flat
// tiles (zero sharpness) are never kept.
std::vector<NiqeFeatureVector> select_niqe_features(const std::vector<NiqePatch>& patches,
                                                    double sharpness_fraction);

// Sample mean and unbiased covariance of pooled feature vectors.
struct FeatureStatistics {
  std::vector<double> mean;
  std::vector<double> covariance;
};
FeatureStatistics feature_statistics(std::span<const NiqeFeatureVector> features);

// Distance between two feature distributions with pseudo-inverse pooling.
double niqe_distance(const NiqePristineModel& model, const FeatureStatistics& stats);

// Colour input is scored on its Y plane. Images smaller than two tiles per
// side, or with fewer than two usable tiles, score Undefined.
MetricResult niqe(const PlanarImage& img, const NiqePristineModel& model);

// Corpus must contain at least 25 images, each at least 2*patch_size square.
NiqePristineModel fit_pristine_model(std::span<const PlanarImage> corpus, int patch_size = 96,
                                     double sharpness_fraction = 0.75);

void save_pristine_model(const NiqePristineModel& model, const std::filesystem::path& path);
NiqePristineModel load_pristine_model(const std::filesystem::path& path);

}  // namespace srbench::metrics
