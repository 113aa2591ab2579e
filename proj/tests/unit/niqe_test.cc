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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "srbench/color.h"
#include "srbench/error.h"
#include "srbench/metrics/niqe.h"
#include "srbench/synthetic.h"
#include "test_util.h"

namespace srbench::metrics {
namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct AggdCase {
  double shape, left, right;
};

TEST(NiqeFitTest, GgdRecoveryAtMillionSamples) {
  for (double shape : {0.5, 1.0, 2.0}) {
    oracle::AggdSampler sampler(shape, 1.3, 1.3, 100 + static_cast<unsigned>(shape * 10));
    const auto x = sampler.draw(1'000'000);
    const GgdParams p = fit_ggd(x);
    EXPECT_LT(rel_err(p.shape, shape), 0.05) << "shape " << shape << " got " << p.shape;
    EXPECT_LT(rel_err(p.variance, 1.3 * 1.3), 0.05) << "shape " << shape;
  }
}

TEST(NiqeFitTest, AggdRecoveryAtMillionSamples) {
  const AggdCase cases[] = {{0.6, 0.5, 1.0}, {1.2, 2.0, 1.0}, {2.5, 0.8, 1.6}};
  unsigned seed = 200;
  for (const auto& c : cases) {
    oracle::AggdSampler sampler(c.shape, c.left, c.right, seed++);
    const auto x = sampler.draw(1'000'000);
    const AggdParams p = fit_aggd(x);
    EXPECT_LT(rel_err(p.shape, c.shape), 0.05) << "shape " << c.shape << " got " << p.shape;
    EXPECT_LT(rel_err(p.left_sigma, c.left), 0.05);
    EXPECT_LT(rel_err(p.right_sigma, c.right), 0.05);
    EXPECT_LT(rel_err(p.mean(), oracle::aggd_mean(c.shape, c.left, c.right)), 0.05);
  }
}

TEST(NiqeFitTest, DegenerateInputsGiveNaNShape) {
  const std::vector<double> zeros(100, 0.0);
  EXPECT_TRUE(std::isnan(fit_ggd(zeros).shape));
  EXPECT_TRUE(std::isnan(fit_aggd(zeros).shape));
}

NiqePristineModel identity_model(const std::vector<double>& mean) {
  NiqePristineModel m;
  m.mean = mean;
  m.covariance.assign(kNiqeFeatureCount * kNiqeFeatureCount, 0.0);
  for (int i = 0; i < kNiqeFeatureCount; ++i) m.covariance[i * kNiqeFeatureCount + i] = 1.0;
  return m;
}

TEST(NiqeDistanceTest, ZeroWhenMeansMatch) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  std::vector<NiqeFeatureVector> features(60);
  for (auto& f : features)
    for (double& v : f) v = nd(rng);
  const FeatureStatistics stats = feature_statistics(features);
  NiqePristineModel model = identity_model(stats.mean);
  EXPECT_NEAR(niqe_distance(model, stats), 0.0, 1e-12);
}

TEST(NiqeDistanceTest, MahalanobisWithPooledCovariance) {
  std::vector<double> mean(kNiqeFeatureCount, 0.0);
  NiqePristineModel model = identity_model(mean);
  FeatureStatistics stats;
  stats.mean.assign(kNiqeFeatureCount, 0.0);
  stats.mean[3] = 2.0;
  stats.covariance = model.covariance;
  for (double& v : stats.covariance) v *= 3.0;
  // Pooled covariance is 2 I, so the squared distance is 4 / 2.
  EXPECT_NEAR(niqe_distance(model, stats), std::sqrt(2.0), 1e-12);
}

TEST(NiqeDistanceTest, SingularCovarianceUsesPseudoInverse) {
  std::vector<double> mean(kNiqeFeatureCount, 0.0);
  NiqePristineModel model = identity_model(mean);
  model.covariance.assign(model.covariance.size(), 0.0);
  model.covariance[0] = 2.0;  // rank one
  FeatureStatistics stats;
  stats.mean = mean;
  stats.mean[0] = 1.0;
  stats.mean[5] = 7.0;  // lies in the null space and is ignored
  stats.covariance = model.covariance;
  EXPECT_NEAR(niqe_distance(model, stats), std::sqrt(0.5), 1e-12);
}

TEST(NiqeStatisticsTest, UnbiasedCovariance) {
  std::vector<NiqeFeatureVector> f(3);
  for (int i = 0; i < 3; ++i) f[i].fill(0.0);
  f[0][0] = 1;
  f[1][0] = 2;
  f[2][0] = 6;
  const auto s = feature_statistics(f);
  EXPECT_NEAR(s.mean[0], 3.0, 1e-15);
  EXPECT_NEAR(s.covariance[0], (4 + 1 + 9) / 2.0, 1e-12);
  EXPECT_THROW(feature_statistics(std::span<const NiqeFeatureVector>(f.data(), 1)), Error);
}

TEST(NiqePatchTest, TileCountAndMscn) {
  const PlanarImage img = luma_or_gray(synthetic::texture(200, 300, 3));
  const auto patches = niqe_patches(img, 96);
  EXPECT_EQ(patches.size(), 2u * 3u);
  for (const auto& p : patches) EXPECT_GT(p.sharpness, 0.0);
  // A constant image has an all-zero MSCN field up to rounding in the local mean.
  const PlanarImage flat = PlanarImage::gray(20, 20, 80.0);
  for (double v : mscn(flat.plane(0), 20, 20)) EXPECT_NEAR(v, 0.0, 1e-12);
  EXPECT_THROW(niqe_patches(PlanarImage::gray(150, 300), 96), Error);
}

TEST(NiqePatchTest, SharpnessSelection) {
  std::vector<NiqePatch> p(4);
  p[0].sharpness = 10;
  p[1].sharpness = 7.4;
  p[2].sharpness = 7.5;
  p[3].sharpness = 9;
  p[3].features[4] = std::nan("");
  EXPECT_EQ(select_niqe_features(p, 0.75).size(), 2u);  // 0 and 2
  EXPECT_EQ(select_niqe_features(p, 0.0).size(), 3u);
}

class ShippedModelTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { model_ = new NiqePristineModel(load_pristine_model(testing::niqe_model_path())); }
  static void TearDownTestSuite() { delete model_; }
  static NiqePristineModel* model_;
};
NiqePristineModel* ShippedModelTest::model_ = nullptr;

TEST_F(ShippedModelTest, BlurRaisesScoreOnPristineCorpus) {
  // The shipped model was fitted on textures with seeds 1..40 at 288x288.
  int higher = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const PlanarImage img = synthetic::texture(288, 288, seed);
    const MetricResult sharp = niqe(img, *model_);
    const MetricResult blurred = niqe(quantize(synthetic::blur(img, 2.0)), *model_);
    ASSERT_TRUE(sharp.ok());
    ASSERT_TRUE(blurred.ok());
    if (blurred.value > sharp.value) ++higher;
  }
  EXPECT_GE(higher, 19);
}

TEST_F(ShippedModelTest, SaveLoadRoundTrip) {
  testing::TempDir dir;
  save_pristine_model(*model_, dir / "m.json");
  const NiqePristineModel back = load_pristine_model(dir / "m.json");
  EXPECT_EQ(back.mean, model_->mean);
  EXPECT_EQ(back.covariance, model_->covariance);
  EXPECT_EQ(back.patch_size, model_->patch_size);
  EXPECT_EQ(back.description, model_->description);
}

TEST(NiqeModelTest, LoadRejectsWrongDimension) {
  testing::TempDir dir;
  testing::write_json(dir / "bad.json", {{"format", "srbench.niqe-pristine"},
                                         {"version", 1},
                                         {"dimension", 18},
                                         {"mean", std::vector<double>(18)},
                                         {"covariance", std::vector<double>(18 * 18)}});
  EXPECT_THROW(load_pristine_model(dir / "bad.json"), Error);
}

TEST(NiqeModelTest, FitNeedsEnoughImages) {
  std::vector<PlanarImage> few(3, PlanarImage::gray(192, 192, 1.0));
  EXPECT_THROW(fit_pristine_model(few), Error);
}

TEST(NiqeModelTest, SmallImageIsUndefined) {
  const NiqePristineModel m = identity_model(std::vector<double>(kNiqeFeatureCount, 0.0));
  EXPECT_EQ(niqe(PlanarImage::gray(100, 100, 5.0), m).status, MetricStatus::kUndefined);
}

}  // namespace
}  // namespace srbench::metrics
