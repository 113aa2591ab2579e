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

#include <gtest/gtest.h>

#include "srbench/error.h"
#include "srbench/metrics/evaluator.h"
#include "srbench/metrics/niqe.h"
#include "test_util.h"

namespace srbench::metrics {
namespace {

TEST(EvaluatorRegistryTest, BuiltinsAndTraits) {
  const auto r = EvaluatorRegistry::with_builtins();
  for (const char* id : {"psnr", "ssim", "niqe", "runtime"}) EXPECT_TRUE(r.contains(id)) << id;
  EXPECT_EQ(r.info("psnr").traits.decimals, 2);
  EXPECT_EQ(r.info("psnr").traits.unit, "dB");
  EXPECT_EQ(r.info("ssim").traits.decimals, 4);
  EXPECT_EQ(r.info("niqe").traits.decimals, 3);
  EXPECT_FALSE(r.info("niqe").traits.higher_is_better);
  EXPECT_EQ(r.info("runtime").traits.unit, "s");
  EXPECT_EQ(r.list().size(), 4u);
  EXPECT_NE(format_evaluator_list(r).find("psnr"), std::string::npos);
}

TEST(EvaluatorRegistryTest, RegistrationRules) {
  auto r = EvaluatorRegistry::with_builtins();
  auto mae = [](const EvalInput& in) {
    double s = 0;
    for (std::size_t i = 0; i < in.reference.data().size(); ++i)
      s += std::abs(in.reference.data()[i] - in.output.data()[i]);
    return MetricResult{"mae", s / in.reference.data().size(), MetricStatus::kOk};
  };
  r.register_evaluator("mae", mae, {"mean absolute error", "", 3, false});
  EXPECT_THROW(r.register_evaluator("mae", mae), Error);
  EXPECT_THROW(r.register_evaluator("", mae), Error);
  r.freeze();
  EXPECT_THROW(r.register_evaluator("other", mae), Error);
  const PlanarImage a = PlanarImage::gray(4, 4, 10), b = PlanarImage::gray(4, 4, 13);
  EXPECT_DOUBLE_EQ(r.evaluate("mae", {a, b, 2, std::nullopt}).value, 3.0);
  EXPECT_THROW(r.evaluate("nope", {a, b, 2, std::nullopt}), Error);
}

TEST(EvaluatorRegistryTest, FailuresBecomeUndefined) {
  const auto r = EvaluatorRegistry::with_builtins();
  const PlanarImage a = PlanarImage::gray(8, 8, 10), b = PlanarImage::gray(8, 8, 20);
  // Smaller than the SSIM window.
  const MetricResult s = r.evaluate("ssim", {a, b, 2, std::nullopt});
  EXPECT_EQ(s.status, MetricStatus::kUndefined);
  EXPECT_EQ(s.id, "ssim");
  EXPECT_EQ(r.evaluate("niqe", {a, b, 2, std::nullopt}).status, MetricStatus::kUndefined);
  EXPECT_EQ(r.evaluate("runtime", {a, b, 2, std::nullopt}).status, MetricStatus::kUndefined);
  const MetricResult t = r.evaluate("runtime", {a, b, 2, 0.25});
  EXPECT_TRUE(t.ok());
  EXPECT_EQ(t.value, 0.25);
}

TEST(EvaluatorRegistryTest, NiqeUsesSuppliedModel) {
  auto r = EvaluatorRegistry::with_builtins(load_pristine_model(testing::niqe_model_path()));
  const PlanarImage flatish = PlanarImage::gray(192, 192, 100);
  // A constant image has no usable tiles.
  EXPECT_EQ(r.evaluate("niqe", {flatish, flatish, 2, std::nullopt}).status, MetricStatus::kUndefined);
}

}  // namespace
}  // namespace srbench::metrics
