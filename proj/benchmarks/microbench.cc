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

#include <benchmark/benchmark.h>

#include "srbench/color.h"
#include "srbench/metrics/full_reference.h"
#include "srbench/metrics/niqe.h"
#include "srbench/resample.h"
#include "srbench/runtime/ensemble.h"
#include "srbench/runtime/upscaler.h"
#include "srbench/synthetic.h"

namespace {

using namespace srbench;

// Side length of a BSD100-like image.
constexpr int kSide = 480;

void BM_ResizeBicubicUp4(benchmark::State& state) {
  const PlanarImage lr = synthetic::texture(kSide / 4, kSide / 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(resize(lr, kSide, kSide, KernelKind::kBicubic));
}
BENCHMARK(BM_ResizeBicubicUp4)->Unit(benchmark::kMillisecond);

void BM_DownscaleHr(benchmark::State& state) {
  const PlanarImage hr = synthetic::texture(kSide, kSide, 2);
  const int scale = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(downscale_hr(hr, scale));
}
BENCHMARK(BM_DownscaleHr)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Psnr(benchmark::State& state) {
  const PlanarImage a = extract_y(synthetic::texture(kSide, kSide, 3));
  const PlanarImage b = extract_y(synthetic::blur(synthetic::texture(kSide, kSide, 3), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(metrics::psnr(a, b));
}
BENCHMARK(BM_Psnr)->Unit(benchmark::kMicrosecond);

void BM_Ssim(benchmark::State& state) {
  const PlanarImage a = extract_y(synthetic::texture(kSide, kSide, 4));
  const PlanarImage b = extract_y(synthetic::blur(synthetic::texture(kSide, kSide, 4), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(metrics::ssim(a, b));
}
BENCHMARK(BM_Ssim)->Unit(benchmark::kMillisecond);

void BM_Niqe(benchmark::State& state) {
  const auto model = metrics::load_pristine_model(SRBENCH_NIQE_MODEL);
  const PlanarImage img = synthetic::texture(kSide, kSide, 5);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::niqe(img, model));
}
BENCHMARK(BM_Niqe)->Unit(benchmark::kMillisecond);

void BM_SelfEnsembleBicubic(benchmark::State& state) {
  auto model = runtime::make_upscaler(runtime::builtin_model(runtime::RunnerKind::kBuiltinBicubic));
  const PlanarImage lr = synthetic::texture(kSide / 4, kSide / 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(runtime::self_ensemble(*model, lr, 4));
}
BENCHMARK(BM_SelfEnsembleBicubic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
