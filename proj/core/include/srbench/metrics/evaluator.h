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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srbench/image.h"
#include "srbench/metrics/metric_result.h"
#include "srbench/metrics/full_reference.h"
#include "srbench/metrics/niqe.h"

namespace srbench::metrics {

// What an evaluator sees: the pair after apply_criteria, the scale, and the
// model's measured time when timing is enabled.
struct EvalInput {
  const PlanarImage& reference;
  const PlanarImage& output;
  int scale = 1;
  std::optional<double> runtime_seconds;
};

using EvaluatorFn = std::function<MetricResult(const EvalInput&)>;

struct EvaluatorTraits {
  std::string description;
  std::string unit;
  int decimals = 4;
  bool higher_is_better = true;
};

struct EvaluatorInfo {
  std::string id;
  EvaluatorTraits traits;
};

class EvaluatorRegistry {
 public:
  // Registers psnr, ssim, niqe and runtime. Without a pristine model the niqe
  // evaluator reports Undefined.
  static EvaluatorRegistry with_builtins(std::optional<NiqePristineModel> niqe_model = {},
                                         SsimParams ssim_params = {});

  // Throws on duplicate ids or after freeze().
  void register_evaluator(std::string_view id, EvaluatorFn fn, EvaluatorTraits traits = {});

  // Ends the registration phase; the registry is read-only afterwards.
  void freeze() noexcept { frozen_ = true; }
  bool frozen() const noexcept { return frozen_; }

  bool contains(std::string_view id) const;
  const EvaluatorInfo& info(std::string_view id) const;
  std::vector<EvaluatorInfo> list() const;

  // Library errors raised by the evaluator become Undefined results; the id
  // on the result is always the registered id.
  MetricResult evaluate(std::string_view id, const EvalInput& input) const;

 private:
  struct Entry {
    EvaluatorInfo info;
    EvaluatorFn fn;
  };
  const Entry& find(std::string_view id) const;

  std::vector<Entry> entries_;
  bool frozen_ = false;
};

// Human-readable listing used by `list-evaluators`.
std::string format_evaluator_list(const EvaluatorRegistry& registry);

}  // namespace srbench::metrics
