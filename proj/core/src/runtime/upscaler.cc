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

#include "srbench/runtime/upscaler.h"

#include <stdlib.h>

#include <chrono>
#include <cstdlib>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"
#include "srbench/png_io.h"
#include "srbench/resample.h"
#include "srbench/runtime/subprocess.h"

namespace srbench::runtime {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double seconds_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// mkdtemp-backed directory removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::filesystem::path& root) {
    std::filesystem::create_directories(root);
    std::string tmpl = (root / "srbench-XXXXXX").string();
    if (::mkdtemp(tmpl.data()) == nullptr) {
      throw Error(ErrorKind::kIo, fmt::format("cannot create temp dir under {}", root.string()));
    }
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string substitute(std::string arg, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    std::size_t pos = 0;
    while ((pos = arg.find(key, pos)) != std::string::npos) {
      arg.replace(pos, key.size(), value);
      pos += value.size();
    }
  }
  return arg;
}

std::map<std::string, std::string> runner_env(const ModelConfig& config, int scale) {
  auto env = config.runner.env;
  env["SRBENCH_INPUT_RANGE"] = std::string(to_string(config.input_range));
  if (scale > 0) env["SRBENCH_SCALE"] = std::to_string(scale);
  return env;
}

PlanarImage load_runner_output(const ModelConfig& config, const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kRunner,
                fmt::format("model '{}': runner did not write {}", config.name, path.string()));
  }
  return load_png(path);
}

class BuiltinUpscaler final : public Upscaler {
 public:
  BuiltinUpscaler(ModelConfig config, RunnerOptions options)
      : config_(std::move(config)), options_(std::move(options)) {
    switch (config_.runner.kind) {
      case RunnerKind::kBuiltinNearest: kernel_ = KernelKind::kNearest; break;
      case RunnerKind::kBuiltinBilinear: kernel_ = KernelKind::kBilinear; break;
      default: kernel_ = KernelKind::kBicubic; break;
    }
  }

  const ModelConfig& config() const override { return config_; }

  UpscaleResult run(const PlanarImage& lr, int scale) override {
    const auto t0 = Clock::now();
    PlanarImage out = resize(lr, lr.width() * scale, lr.height() * scale, kernel_, true);
    const double dt = seconds_between(t0, Clock::now());
    TimingSample t;
    t.wall_seconds = t.raw_seconds = dt;
    t.device_label = options_.device_label;
    return {std::move(out), t};
  }

 private:
  ModelConfig config_;
  RunnerOptions options_;
  KernelKind kernel_;
};

class CommandUpscaler final : public Upscaler {
 public:
  CommandUpscaler(ModelConfig config, RunnerOptions options)
      : config_(std::move(config)), options_(std::move(options)) {}

  const ModelConfig& config() const override { return config_; }

  UpscaleResult run(const PlanarImage& lr, int scale) override {
    TempDir dir(options_.temp_root);
    const auto input = dir.path() / "input.png";
    const auto output = dir.path() / "output.png";
    save_png(lr, input);

    const std::map<std::string, std::string> values = {
        {"{input}", input.string()},
        {"{output}", output.string()},
        {"{scale}", std::to_string(scale)},
        {"{input_range}", std::string(to_string(config_.input_range))}};
    Subprocess::Options opts;
    for (const auto& a : config_.runner.argv) opts.argv.push_back(substitute(a, values));
    opts.working_dir = config_.runner.working_dir;
    opts.env = runner_env(config_, scale);

    const auto t0 = Clock::now();
    Subprocess child(opts);
    const auto status =
        child.wait_for(std::chrono::duration<double>(config_.runner.request_timeout));
    const double dt = seconds_between(t0, Clock::now());
    if (!status) {
      child.kill();
      throw Error(ErrorKind::kRunner,
                  fmt::format("model '{}': command timed out after {} s", config_.name,
                              config_.runner.request_timeout));
    }
    if (*status != 0) {
      throw Error(ErrorKind::kRunner,
                  fmt::format("model '{}': command exited with status {}", config_.name, *status));
    }
    TimingSample t;
    t.wall_seconds = t.raw_seconds = dt;
    t.startup_inclusive = true;
    t.device_label = options_.device_label;
    return {load_runner_output(config_, output), t};
  }

 private:
  ModelConfig config_;
  RunnerOptions options_;
};

class ServerUpscaler final : public Upscaler {
 public:
  static constexpr int kPingSamples = 5;

  ServerUpscaler(ModelConfig config, RunnerOptions options)
      : config_(std::move(config)), options_(std::move(options)) {}

  ~ServerUpscaler() override { shutdown(); }

  const ModelConfig& config() const override { return config_; }

  void reset() override { shutdown(); }

  UpscaleResult run(const PlanarImage& lr, int scale) override {
    ensure_started();
    TempDir dir(options_.temp_root);
    const auto input = dir.path() / "input.png";
    const auto output = dir.path() / "output.png";
    save_png(lr, input);

    json req;
    req["id"] = next_id_++;
    req["input"] = input.string();
    req["output"] = output.string();
    req["scale"] = scale;
    const auto t0 = Clock::now();
    const json reply = exchange(req, config_.runner.request_timeout);
    const double dt = seconds_between(t0, Clock::now());
    if (reply.at("status") != "ok") {
      throw Error(ErrorKind::kRunner,
                  fmt::format("model '{}': runner reported error: {}", config_.name,
                              reply.value("message", std::string("(no message)"))));
    }
    TimingSample t;
    t.raw_seconds = dt;
    t.overhead_seconds = overhead_;
    // Keep the sample strictly positive even when the baseline dominates.
    t.wall_seconds = std::max(dt - overhead_, 1e-9);
    t.device_label = options_.device_label;
    return {load_runner_output(config_, output), t};
  }

 private:
  void ensure_started() {
    if (child_) return;
    Subprocess::Options opts;
    const std::map<std::string, std::string> values = {
        {"{input_range}", std::string(to_string(config_.input_range))}};
    for (const auto& a : config_.runner.argv) opts.argv.push_back(substitute(a, values));
    opts.working_dir = config_.runner.working_dir;
    opts.env = runner_env(config_, 0);
    opts.pipe_stdin = true;
    opts.pipe_stdout = true;
    child_ = std::make_unique<Subprocess>(opts);
    overhead_ = 0.0;

    // The first ping doubles as the readiness probe and absorbs model
    // loading. A runner that rejects pings simply gets no baseline.
    const json first = exchange(ping(), config_.runner.startup_timeout);
    if (first.at("status") != "ok") return;
    double total = 0.0;
    for (int i = 0; i < kPingSamples; ++i) {
      const auto t0 = Clock::now();
      const json r = exchange(ping(), config_.runner.request_timeout);
      total += seconds_between(t0, Clock::now());
      if (r.at("status") != "ok") return;
    }
    overhead_ = total / kPingSamples;
  }

  json ping() {
    json p;
    p["id"] = next_id_++;
    p["op"] = "ping";
    return p;
  }

  json exchange(const json& request, double timeout_seconds) {
    try {
      child_->write_line(request.dump());
      const auto line = child_->read_line(std::chrono::duration<double>(timeout_seconds));
      if (!line) {
        throw Error(ErrorKind::kRunner,
                    fmt::format("model '{}': no reply within {} s", config_.name, timeout_seconds));
      }
      json reply;
      try {
        reply = json::parse(*line);
      } catch (const json::parse_error&) {
        throw Error(ErrorKind::kProtocol,
                    fmt::format("model '{}': malformed reply line '{}'", config_.name, *line));
      }
      if (!reply.is_object() || !reply.contains("id") || !reply.contains("status") ||
          !reply["status"].is_string()) {
        throw Error(ErrorKind::kProtocol,
                    fmt::format("model '{}': reply lacks id/status: {}", config_.name, *line));
      }
      if (reply["id"] != request["id"]) {
        throw Error(ErrorKind::kProtocol,
                    fmt::format("model '{}': reply id {} does not match request id {}",
                                config_.name, reply["id"].dump(), request["id"].dump()));
      }
      const auto status = reply["status"].get<std::string>();
      if (status != "ok" && status != "error") {
        throw Error(ErrorKind::kProtocol,
                    fmt::format("model '{}': unknown reply status '{}'", config_.name, status));
      }
      return reply;
    } catch (const Error&) {
      // The stream can no longer be trusted; restart on the next request.
      shutdown();
      throw;
    }
  }

  void shutdown() {
    if (!child_) return;
    child_->close_stdin();
    if (!child_->wait_for(std::chrono::seconds(2))) child_->kill();
    child_.reset();
  }

  ModelConfig config_;
  RunnerOptions options_;
  std::unique_ptr<Subprocess> child_;
  long long next_id_ = 1;
  double overhead_ = 0.0;
};

}  // namespace

std::filesystem::path default_temp_root() {
  if (const char* env = std::getenv("SRBENCH_TMPDIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::temp_directory_path();
}

std::unique_ptr<Upscaler> make_upscaler(const ModelConfig& config, RunnerOptions options) {
  if (options.temp_root.empty()) options.temp_root = default_temp_root();
  switch (config.runner.kind) {
    case RunnerKind::kCommand:
      return std::make_unique<CommandUpscaler>(config, std::move(options));
    case RunnerKind::kServer:
      return std::make_unique<ServerUpscaler>(config, std::move(options));
    default:
      return std::make_unique<BuiltinUpscaler>(config, std::move(options));
  }
}

UpscaleResult upscale(Upscaler& model, const PlanarImage& lr, int scale) {
  const ModelConfig& cfg = model.config();
  if (!cfg.supports(scale)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("model '{}' does not support scale {} (supported: {})", cfg.name,
                            scale, fmt::join(cfg.scales, ", ")));
  }
  UpscaleResult r = [&] {
    try {
      return model.run(lr, scale);
    } catch (const Error& e) {
      const std::string tag = fmt::format("model '{}'", cfg.name);
      if (std::string_view(e.what()).find(tag) != std::string_view::npos) throw;
      throw Error(e.kind(), fmt::format("{}: {}", tag, e.what()));
    }
  }();
  const int ew = lr.width() * scale;
  const int eh = lr.height() * scale;
  if (r.image.width() != ew || r.image.height() != eh) {
    throw Error(ErrorKind::kRunner,
                fmt::format("model '{}' violated the dimension contract: {}x{} input at scale {} "
                            "produced {}x{}, expected {}x{}",
                            cfg.name, lr.width(), lr.height(), scale, r.image.width(),
                            r.image.height(), ew, eh));
  }
  if (r.image.channels() != lr.channels()) {
    throw Error(ErrorKind::kRunner,
                fmt::format("model '{}' returned {} channels for a {}-channel input", cfg.name,
                            r.image.channels(), lr.channels()));
  }
  return r;
}

}  // namespace srbench::runtime
