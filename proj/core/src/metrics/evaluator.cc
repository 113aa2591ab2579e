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

#include "srbench/metrics/evaluator.h"

#include <algorithm>

#include <fmt/format.h>

#include "srbench/error.h"

namespace srbench::metrics {

EvaluatorRegistry EvaluatorRegistry::with_builtins(std::optional<NiqePristineModel> niqe_model,
                                                   SsimParams ssim_params) {
  EvaluatorRegistry r;
  r.register_evaluator(
      "psnr", [](const EvalInput& in) { return psnr(in.reference, in.output); },
      {"peak signal-to-noise ratio, MAX = 255", "dB", 2, true});
  r.register_evaluator(
      "ssim",
      [ssim_params](const EvalInput& in) { return ssim(in.reference, in.output, ssim_params); },
      {"structural similarity, 11x11 Gaussian window", "", 4, true});
  r.register_evaluator(
      "niqe",
      [model = std::move(niqe_model)](const EvalInput& in) {
        if (!model) return MetricResult{"niqe", 0.0, MetricStatus::kUndefined};
        return niqe(in.output, *model);
      },
      {"natural image quality evaluator (no-reference, lower is better)", "", 3, false});
  r.register_evaluator(
      "runtime",
      [](const EvalInput& in) {
        if (!in.runtime_seconds) return MetricResult{"runtime", 0.0, MetricStatus::kUndefined};
        return MetricResult{"runtime", *in.runtime_seconds, MetricStatus::kOk};
      },
      {"model wall-clock time per image", "s", 3, false});
  return r;
}

void EvaluatorRegistry::register_evaluator(std::string_view id, EvaluatorFn fn,
                                           EvaluatorTraits traits) {
  if (frozen_) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("evaluator registry is frozen; cannot add '{}'", id));
  }
  if (id.empty()) throw Error(ErrorKind::kInvalidArgument, "evaluator id must not be empty");
  if (contains(id)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("evaluator '{}' is already registered", id));
  }
  if (!fn) throw Error(ErrorKind::kInvalidArgument, "evaluator function is empty");
  entries_.push_back({{std::string(id), std::move(traits)}, std::move(fn)});
}

bool EvaluatorRegistry::contains(std::string_view id) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.info.id == id; });
}

const EvaluatorRegistry::Entry& EvaluatorRegistry::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.info.id == id) return e;
  }
  throw Error(ErrorKind::kConfig, fmt::format("unknown evaluator '{}'", id));
}

const EvaluatorInfo& EvaluatorRegistry::info(std::string_view id) const { return find(id).info; }

std::vector<EvaluatorInfo> EvaluatorRegistry::list() const {
  std::vector<EvaluatorInfo> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.info);
  return out;
}

MetricResult EvaluatorRegistry::evaluate(std::string_view id, const EvalInput& input) const {
  const Entry& e = find(id);
  MetricResult r;
  try {
    r = e.fn(input);
  } catch (const Error&) {
    r = MetricResult{"", 0.0, MetricStatus::kUndefined};
  }
  r.id = e.info.id;
  return r;
}

std::string format_evaluator_list(const EvaluatorRegistry& registry) {
  std::string out;
  for (const auto& info : registry.list()) {
    out += fmt::format("{:<10} {:<4} {}\n", info.id, info.traits.unit,
                       info.traits.description);
  }
  return out;
}

}  // namespace srbench::metrics
