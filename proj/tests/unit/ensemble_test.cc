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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "srbench/resample.h"
#include "srbench/runtime/ensemble.h"

namespace srbench::runtime {
namespace {

PlanarImage rand_img(int w, int h, std::mt19937_64& rng, ColorSpace cs = ColorSpace::kRgb) {
  return oracle::random_image(w, h, cs, rng);
}

double max_abs_diff(const PlanarImage& a, const PlanarImage& b) {
  EXPECT_EQ(a.width(), b.width());
  EXPECT_EQ(a.height(), b.height());
  double m = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    for (std::size_t i = 0; i < a.plane(c).size(); ++i) {
      m = std::max(m, std::abs(a.plane(c)[i] - b.plane(c)[i]));
    }
  }
  return m;
}

// Linear, deliberately orientation-dependent model: block replication plus
// a pull from the right neighbour and a push from the one above.
class SkewedModel : public Upscaler {
 public:
  SkewedModel() { config_ = builtin_model(RunnerKind::kBuiltinNearest); config_.name = "skewed"; }
  const ModelConfig& config() const override { return config_; }
  UpscaleResult run(const PlanarImage& lr, int s) override {
    ++calls;
    PlanarImage out(lr.width() * s, lr.height() * s, lr.colorspace());
    for (int c = 0; c < lr.channels(); ++c) {
      for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
          const int lx = x / s, ly = y / s;
          const double right = lr.at(c, ly, std::min(lx + 1, lr.width() - 1));
          const double up = lr.at(c, std::max(ly - 1, 0), lx);
          out.at(c, y, x) = lr.at(c, ly, lx) + 0.3 * right - 0.1 * up + 0.01 * (x % s);
        }
      }
    }
    UpscaleResult r{std::move(out), {}};
    r.timing.wall_seconds = r.timing.raw_seconds = 0.25;
    return r;
  }
  int calls = 0;

 private:
  ModelConfig config_;
};

TEST(Ensemble, TransformsFormTheDihedralGroup) {
  std::mt19937_64 rng(3);
  const PlanarImage img = rand_img(5, 3, rng);
  std::set<std::vector<double>> seen;
  for (const auto& t : ensemble_transforms()) {
    const PlanarImage fwd = t.apply(img);
    if (t.rotation % 2 == 1) {
      EXPECT_EQ(fwd.width(), 3);
      EXPECT_EQ(fwd.height(), 5);
    }
    EXPECT_EQ(t.invert(fwd), img);
    seen.insert(std::vector<double>(fwd.plane(0).begin(), fwd.plane(0).end()));
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Ensemble, NearestIsAFixpoint) {
  std::mt19937_64 rng(5);
  auto model = make_upscaler(builtin_model(RunnerKind::kBuiltinNearest));
  for (int i = 0; i < 5; ++i) {
    const PlanarImage lr = rand_img(7 + i, 5, rng);
    EXPECT_EQ(self_ensemble(*model, lr, 3).image, upscale(*model, lr, 3).image);
  }
}

TEST(Ensemble, SymmetricModelIsUnchanged) {
  std::mt19937_64 rng(7);
  auto model = make_upscaler(builtin_model(RunnerKind::kBuiltinBicubic));
  for (int i = 0; i < 5; ++i) {
    const PlanarImage lr = rand_img(9, 6 + i, rng);
    EXPECT_LE(max_abs_diff(self_ensemble(*model, lr, 2).image, upscale(*model, lr, 2).image), 1e-9);
  }
}

TEST(Ensemble, EquivariantUnderTheGroup) {
  std::mt19937_64 rng(11);
  SkewedModel model;
  const auto transforms = ensemble_transforms();
  for (int i = 0; i < 20; ++i) {
    const PlanarImage lr = rand_img(6 + i % 4, 5 + i % 3, rng, i % 2 ? ColorSpace::kRgb : ColorSpace::kGray);
    const GeometricTransform& t = transforms[1 + i % 7];
    const PlanarImage lhs = self_ensemble(model, t.apply(lr), 2).image;
    const PlanarImage rhs = t.apply(self_ensemble(model, lr, 2).image);
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-9) << "case " << i;
    // The plain model is not equivariant, so the test has teeth.
    EXPECT_GT(max_abs_diff(model.run(t.apply(lr), 2).image, t.apply(model.run(lr, 2).image)), 1e-3);
  }
}

TEST(Ensemble, MatchesDirectAverageForLinearModel) {
  std::mt19937_64 rng(13);
  SkewedModel model;
  const PlanarImage lr = rand_img(8, 6, rng);
  PlanarImage expected(16, 12, lr.colorspace());
  for (const auto& t : ensemble_transforms()) {
    const PlanarImage branch = t.invert(model.run(t.apply(lr), 2).image);
    for (int c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < branch.plane(c).size(); ++k) expected.plane(c)[k] += branch.plane(c)[k] / 8.0;
  }
  EXPECT_LE(max_abs_diff(self_ensemble(model, lr, 2).image, expected), 1e-9);
}

TEST(Ensemble, TimingCoversEightModelCalls) {
  std::mt19937_64 rng(17);
  SkewedModel model;
  const UpscaleResult r = self_ensemble(model, rand_img(6, 6, rng), 2);
  EXPECT_EQ(model.calls, 8);
  EXPECT_GE(r.timing.wall_seconds, 8 * 0.25);
  EXPECT_LT(r.timing.wall_seconds, 8 * 0.25 + 1.0);
}

TEST(Ensemble, RunModelDispatches) {
  std::mt19937_64 rng(19);
  SkewedModel model;
  const PlanarImage lr = rand_img(6, 4, rng);
  run_model(model, lr, 2, false);
  EXPECT_EQ(model.calls, 1);
  run_model(model, lr, 2, true);
  EXPECT_EQ(model.calls, 9);
}

}  // namespace
}  // namespace srbench::runtime
