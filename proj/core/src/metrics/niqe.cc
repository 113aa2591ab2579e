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

#include "srbench/metrics/niqe.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <Eigen/Dense>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/color.h"
#include "srbench/error.h"
#include "srbench/filter.h"
#include "srbench/resample.h"

namespace srbench::metrics {
namespace {

constexpr double kShapeMin = 0.2;
constexpr double kShapeStep = 0.001;
constexpr int kShapeCount = 9801;  // 0.2 .. 10.0 inclusive
constexpr double kPinvTolerance = 1e-10;
constexpr const char* kModelFormat = "srbench.niqe-pristine";

double shape_at(int k) { return kShapeMin + kShapeStep * k; }

// Gamma(2/a)^2 / (Gamma(1/a) Gamma(3/a)), increasing in a. Computed through
// lgamma since Gamma(1/0.2) etc. stays well inside double range but the
// ratio is better conditioned in log space.
const std::vector<double>& ratio_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kShapeCount);
    for (int k = 0; k < kShapeCount; ++k) {
      const double a = shape_at(k);
      t[k] = std::exp(2.0 * std::lgamma(2.0 / a) - std::lgamma(1.0 / a) - std::lgamma(3.0 / a));
    }
    return t;
  }();
  return table;
}

double lookup_shape(double target) {
  const auto& t = ratio_table();
  const auto it = std::lower_bound(t.begin(), t.end(), target);
  if (it == t.begin()) return shape_at(0);
  if (it == t.end()) return shape_at(kShapeCount - 1);
  const auto k = static_cast<int>(it - t.begin());
  // Ties resolve to the smaller shape.
  return (target - t[k - 1] <= t[k] - target) ? shape_at(k - 1) : shape_at(k);
}

constexpr int kShifts[4][2] = {{0, 1}, {1, 0}, {1, 1}, {-1, 1}};

// Features of one tile of an MSCN field, written into out[0..17].
void tile_features(const std::vector<double>& field, int width, int x0, int y0, int size,
                   double* out) {
  std::vector<double> tile(static_cast<std::size_t>(size) * size);
  for (int y = 0; y < size; ++y) {
    const double* src = field.data() + static_cast<std::size_t>(y0 + y) * width + x0;
    std::copy(src, src + size, tile.data() + static_cast<std::size_t>(y) * size);
  }
  const GgdParams g = fit_ggd(tile);
  out[0] = g.shape;
  out[1] = g.variance;

  std::vector<double> products(tile.size());
  for (int s = 0; s < 4; ++s) {
    const int dy = kShifts[s][0];
    const int dx = kShifts[s][1];
    for (int y = 0; y < size; ++y) {
      const int sy = ((y - dy) % size + size) % size;
      for (int x = 0; x < size; ++x) {
        const int sx = ((x - dx) % size + size) % size;
        products[static_cast<std::size_t>(y) * size + x] =
            tile[static_cast<std::size_t>(y) * size + x] *
            tile[static_cast<std::size_t>(sy) * size + sx];
      }
    }
    const AggdParams a = fit_aggd(products);
    out[2 + 4 * s + 0] = a.shape;
    out[2 + 4 * s + 1] = a.mean();
    out[2 + 4 * s + 2] = a.left_sigma * a.left_sigma;
    out[2 + 4 * s + 3] = a.right_sigma * a.right_sigma;
  }
}

Eigen::MatrixXd to_matrix(const std::vector<double>& row_major, int n) {
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = row_major[static_cast<std::size_t>(r) * n + c];
  }
  return m;
}

}  // namespace

void NiqePristineModel::validate() const {
  if (mean.size() != static_cast<std::size_t>(kNiqeFeatureCount) ||
      covariance.size() != static_cast<std::size_t>(kNiqeFeatureCount) * kNiqeFeatureCount) {
    throw Error(ErrorKind::kFormat,
                fmt::format("NIQE model must have {} means and a {}x{} covariance",
                            kNiqeFeatureCount, kNiqeFeatureCount, kNiqeFeatureCount));
  }
  if (patch_size < 8 || patch_size % 2 != 0) {
    throw Error(ErrorKind::kFormat,
                fmt::format("NIQE patch size must be even and >= 8, got {}", patch_size));
  }
  if (!(sharpness_fraction >= 0.0 && sharpness_fraction <= 1.0)) {
    throw Error(ErrorKind::kFormat, "NIQE sharpness fraction must lie in [0, 1]");
  }
  const int n = kNiqeFeatureCount;
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      const double a = covariance[static_cast<std::size_t>(r) * n + c];
      const double b = covariance[static_cast<std::size_t>(c) * n + r];
      if (std::abs(a - b) > 1e-9 * std::max({1.0, std::abs(a), std::abs(b)})) {
        throw Error(ErrorKind::kFormat, "NIQE covariance is not symmetric");
      }
    }
  }
}

double AggdParams::mean() const {
  if (!(shape > 0.0)) return 0.0;
  return (right_sigma - left_sigma) * std::exp(std::lgamma(2.0 / shape) - std::lgamma(1.0 / shape)) *
         std::sqrt(std::exp(std::lgamma(1.0 / shape) - std::lgamma(3.0 / shape)));
}

GgdParams fit_ggd(std::span<const double> samples) {
  double sq = 0.0;
  double abs_sum = 0.0;
  for (double v : samples) {
    sq += v * v;
    abs_sum += std::abs(v);
  }
  const double n = static_cast<double>(samples.size());
  const double variance = sq / n;
  const double e_abs = abs_sum / n;
  if (samples.empty() || variance == 0.0) {
    return {std::numeric_limits<double>::quiet_NaN(), variance};
  }
  return {lookup_shape(e_abs * e_abs / variance), variance};
}

AggdParams fit_aggd(std::span<const double> samples) {
  double left_sq = 0.0;
  double right_sq = 0.0;
  double abs_sum = 0.0;
  std::size_t left_n = 0;
  std::size_t right_n = 0;
  for (double v : samples) {
    if (v < 0.0) {
      left_sq += v * v;
      abs_sum -= v;
      ++left_n;
    } else if (v > 0.0) {
      right_sq += v * v;
      abs_sum += v;
      ++right_n;
    }
  }
  AggdParams p;
  p.left_sigma = left_n > 0 ? std::sqrt(left_sq / left_n) : 0.0;
  p.right_sigma = right_n > 0 ? std::sqrt(right_sq / right_n) : 0.0;
  const double n = static_cast<double>(samples.size());
  const double second = (left_sq + right_sq) / n;
  if (samples.empty() || second == 0.0 || p.right_sigma == 0.0) {
    p.shape = std::numeric_limits<double>::quiet_NaN();
    return p;
  }
  const double first = abs_sum / n;
  const double r_hat = first * first / second;
  const double g = p.left_sigma / p.right_sigma;
  const double r_norm = r_hat * (g * g * g + 1.0) * (g + 1.0) / ((g * g + 1.0) * (g * g + 1.0));
  p.shape = lookup_shape(r_norm);
  return p;
}

std::vector<double> mscn(std::span<const double> plane, int width, int height,
                         std::vector<double>* local_sigma) {
  const auto g = gaussian_kernel(7, 7.0 / 6.0);
  const auto mu = correlate_same(plane, width, height, g, g, Border::kReplicate);
  std::vector<double> sq(plane.size());
  for (std::size_t i = 0; i < plane.size(); ++i) sq[i] = plane[i] * plane[i];
  const auto e2 = correlate_same(sq, width, height, g, g, Border::kReplicate);
  std::vector<double> out(plane.size());
  std::vector<double> sigma(plane.size());
  for (std::size_t i = 0; i < plane.size(); ++i) {
    sigma[i] = std::sqrt(std::abs(e2[i] - mu[i] * mu[i]));
    out[i] = (plane[i] - mu[i]) / (sigma[i] + 1.0);
  }
  if (local_sigma != nullptr) *local_sigma = std::move(sigma);
  return out;
}

std::vector<NiqePatch> niqe_patches(const PlanarImage& img, int patch_size) {
  if (img.channels() != 1) {
    throw Error(ErrorKind::kInvalidArgument, "niqe expects a single-channel image");
  }
  if (patch_size < 8 || patch_size % 2 != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("niqe patch size must be even and >= 8, got {}", patch_size));
  }
  if (img.width() < 2 * patch_size || img.height() < 2 * patch_size) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("niqe needs at least {0}x{0} pixels, got {1}x{2}", 2 * patch_size,
                            img.width(), img.height()));
  }
  const int cols = img.width() / patch_size;
  const int rows = img.height() / patch_size;
  const PlanarImage full = crop(img, 0, 0, cols * patch_size, rows * patch_size);
  const PlanarImage half =
      resize(full, full.width() / 2, full.height() / 2, KernelKind::kBicubic, true);

  std::vector<double> sigma;
  const auto field1 = mscn(full.plane(0), full.width(), full.height(), &sigma);
  const auto field2 = mscn(half.plane(0), half.width(), half.height());
  const int half_patch = patch_size / 2;

  std::vector<NiqePatch> patches;
  patches.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      NiqePatch p;
      tile_features(field1, full.width(), c * patch_size, r * patch_size, patch_size,
                    p.features.data());
      tile_features(field2, half.width(), c * half_patch, r * half_patch, half_patch,
                    p.features.data() + kNiqeFeaturesPerScale);
      double s = 0.0;
      for (int y = 0; y < patch_size; ++y) {
        const double* row =
            sigma.data() + static_cast<std::size_t>(r * patch_size + y) * full.width() +
            c * patch_size;
        for (int x = 0; x < patch_size; ++x) s += row[x];
      }
      p.sharpness = s / (static_cast<double>(patch_size) * patch_size);
      patches.push_back(p);
    }
  }
  return patches;
}

namespace {

// Tiles whose mean local deviation is below this (in 8-bit units) are flat
// and never selected. Cancellation in E[x^2] - E[x]^2 leaves about 1e-6 on
// constant input.
constexpr double kFlatSharpness = 1e-3;

}  // namespace

std::vector<NiqeFeatureVector> select_niqe_features(const std::vector<NiqePatch>& patches,
                                                    double sharpness_fraction) {
  double max_sharpness = 0.0;
  for (const auto& p : patches) max_sharpness = std::max(max_sharpness, p.sharpness);
  const double threshold = sharpness_fraction * max_sharpness;
  std::vector<NiqeFeatureVector> kept;
  for (const auto& p : patches) {
    if (p.sharpness < threshold || p.sharpness <= kFlatSharpness) continue;
    if (!std::all_of(p.features.begin(), p.features.end(),
                     [](double v) { return std::isfinite(v); })) {
      continue;
    }
    kept.push_back(p.features);
  }
  return kept;
}

FeatureStatistics feature_statistics(std::span<const NiqeFeatureVector> features) {
  if (features.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("need at least 2 qualifying patches, got {}", features.size()));
  }
  constexpr int n = kNiqeFeatureCount;
  FeatureStatistics st;
  st.mean.assign(n, 0.0);
  for (const auto& f : features) {
    for (int i = 0; i < n; ++i) st.mean[i] += f[i];
  }
  for (double& m : st.mean) m /= static_cast<double>(features.size());
  st.covariance.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& f : features) {
    for (int r = 0; r < n; ++r) {
      const double dr = f[r] - st.mean[r];
      for (int c = r; c < n; ++c) {
        st.covariance[static_cast<std::size_t>(r) * n + c] += dr * (f[c] - st.mean[c]);
      }
    }
  }
  const double denom = static_cast<double>(features.size() - 1);
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      const double v = st.covariance[static_cast<std::size_t>(r) * n + c] / denom;
      st.covariance[static_cast<std::size_t>(r) * n + c] = v;
      st.covariance[static_cast<std::size_t>(c) * n + r] = v;
    }
  }
  return st;
}

double niqe_distance(const NiqePristineModel& model, const FeatureStatistics& stats) {
  constexpr int n = kNiqeFeatureCount;
  const Eigen::MatrixXd pooled =
      0.5 * (to_matrix(model.covariance, n) + to_matrix(stats.covariance, n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pooled);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::kInvalidArgument, "niqe: covariance decomposition failed");
  }
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double cutoff = kPinvTolerance * values.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(values[i]) > cutoff) inv[i] = 1.0 / values[i];
  }
  Eigen::VectorXd diff(n);
  for (int i = 0; i < n; ++i) diff[i] = model.mean[i] - stats.mean[i];
  const Eigen::VectorXd proj = eig.eigenvectors().transpose() * diff;
  const double d = proj.cwiseProduct(inv).dot(proj);
  return std::sqrt(std::max(0.0, d));
}

MetricResult niqe(const PlanarImage& img, const NiqePristineModel& model) {
  model.validate();
  const PlanarImage luma = luma_or_gray(img);
  const int min_side = 2 * model.patch_size;
  if (luma.width() < min_side || luma.height() < min_side) {
    return {"niqe", std::numeric_limits<double>::quiet_NaN(), MetricStatus::kUndefined};
  }
  const auto features =
      select_niqe_features(niqe_patches(luma, model.patch_size), model.sharpness_fraction);
  if (features.size() < 2) {
    return {"niqe", std::numeric_limits<double>::quiet_NaN(), MetricStatus::kUndefined};
  }
  const FeatureStatistics stats = feature_statistics(features);
  return {"niqe", niqe_distance(model, stats), MetricStatus::kOk};
}

NiqePristineModel fit_pristine_model(std::span<const PlanarImage> corpus, int patch_size,
                                     double sharpness_fraction) {
  constexpr std::size_t kMinCorpus = 25;
  if (corpus.size() < kMinCorpus) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("pristine corpus needs at least {} images, got {}", kMinCorpus,
                            corpus.size()));
  }
  std::vector<NiqeFeatureVector> pooled;
  for (const PlanarImage& img : corpus) {
    const auto kept =
        select_niqe_features(niqe_patches(luma_or_gray(img), patch_size), sharpness_fraction);
    pooled.insert(pooled.end(), kept.begin(), kept.end());
  }
  FeatureStatistics stats = feature_statistics(pooled);
  NiqePristineModel model;
  model.mean = std::move(stats.mean);
  model.covariance = std::move(stats.covariance);
  model.patch_size = patch_size;
  model.sharpness_fraction = sharpness_fraction;
  model.description =
      fmt::format("fitted from {} images, {} patches", corpus.size(), pooled.size());
  return model;
}

void save_pristine_model(const NiqePristineModel& model, const std::filesystem::path& path) {
  model.validate();
  nlohmann::ordered_json j;
  j["format"] = kModelFormat;
  j["version"] = kNiqeModelVersion;
  j["dimension"] = kNiqeFeatureCount;
  j["patch_size"] = model.patch_size;
  j["sharpness_fraction"] = model.sharpness_fraction;
  j["description"] = model.description;
  j["mean"] = model.mean;
  j["covariance"] = model.covariance;
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot create {}", path.string()));
  out << j.dump(1) << '\n';
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", path.string()));
}

NiqePristineModel load_pristine_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open {}", path.string()));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
    if (j.at("format").get<std::string>() != kModelFormat) {
      throw Error(ErrorKind::kFormat, "not a NIQE pristine model file");
    }
    if (j.at("version").get<int>() != kNiqeModelVersion) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("unsupported NIQE model version {}", j.at("version").dump()));
    }
    if (j.at("dimension").get<int>() != kNiqeFeatureCount) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("NIQE model dimension {} does not match {}",
                              j.at("dimension").dump(), kNiqeFeatureCount));
    }
    NiqePristineModel model;
    model.patch_size = j.at("patch_size").get<int>();
    model.sharpness_fraction = j.at("sharpness_fraction").get<double>();
    model.description = j.value("description", "");
    model.mean = j.at("mean").get<std::vector<double>>();
    model.covariance = j.at("covariance").get<std::vector<double>>();
    model.validate();
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, fmt::format("{}: {}", path.string(), e.what()));
  } catch (const Error& e) {
    throw Error(e.kind(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace srbench::metrics
