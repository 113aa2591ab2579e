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

#include <sys/types.h>

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srbench::runtime {

// A child process with optional line-oriented pipes on stdin/stdout. stderr
// is inherited; an unpiped stdout is sent to stderr so runner chatter never
// mixes with the harness's own output. The destructor kills and reaps a child that is still alive.
class Subprocess {
 public:
  struct Options {
    std::vector<std::string> argv;
    std::filesystem::path working_dir;
    std::map<std::string, std::string> env;  // merged over the parent env
    bool pipe_stdin = false;
    bool pipe_stdout = false;
  };

  explicit Subprocess(const Options& options);
  ~Subprocess();

  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;

  pid_t pid() const noexcept { return pid_; }

  // Throws Error(kRunner) if the child has closed its stdin.
  void write_line(std::string_view line);

  // One line without the trailing newline. nullopt on timeout; throws
  // Error(kRunner) on end of stream.
  std::optional<std::string> read_line(std::chrono::duration<double> timeout);

  // Exit status (or 128 + signal). nullopt if the child is still running
  // when the timeout expires.
  std::optional<int> wait_for(std::chrono::duration<double> timeout);
  int wait();

  void close_stdin();
  void kill();
  bool exited() const noexcept { return exit_status_.has_value(); }

 private:
  bool try_reap(bool block);

  pid_t pid_ = -1;
  int pidfd_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  std::string buffer_;
  std::optional<int> exit_status_;
};

}  // namespace srbench::runtime
