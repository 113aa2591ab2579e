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

#include "srbench/runtime/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/syscall.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include <fmt/format.h>

#include "srbench/error.h"

extern char** environ;

namespace srbench::runtime {
namespace {

void ignore_sigpipe_once() {
  static const bool done = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)done;
}

int open_pidfd(pid_t pid) {
#ifdef SYS_pidfd_open
  const long fd = ::syscall(SYS_pidfd_open, pid, 0);
  return fd < 0 ? -1 : static_cast<int>(fd);
#else
  (void)pid;
  return -1;
#endif
}

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

int decode_status(int status) {
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

std::vector<std::string> build_env(const std::map<std::string, std::string>& overrides) {
  std::map<std::string, std::string> merged;
  for (char** e = environ; e != nullptr && *e != nullptr; ++e) {
    std::string_view kv(*e);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) continue;
    merged[std::string(kv.substr(0, eq))] = std::string(kv.substr(eq + 1));
  }
  for (const auto& [k, v] : overrides) merged[k] = v;
  std::vector<std::string> out;
  out.reserve(merged.size());
  for (const auto& [k, v] : merged) out.push_back(k + "=" + v);
  return out;
}

}  // namespace

Subprocess::Subprocess(const Options& options) {
  if (options.argv.empty()) throw Error(ErrorKind::kRunner, "empty argv");
  ignore_sigpipe_once();

  // Everything the child touches is prepared before fork.
  std::vector<std::string> env_strings = build_env(options.env);
  std::vector<char*> envp;
  for (auto& s : env_strings) envp.push_back(s.data());
  envp.push_back(nullptr);
  std::vector<std::string> args = options.argv;
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  const std::string cwd = options.working_dir.string();

  int in_pipe[2] = {-1, -1};
  int out_pipe[2] = {-1, -1};
  int err_pipe[2] = {-1, -1};
  auto fail = [&](const char* what) {
    const int e = errno;
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]}) {
      if (fd >= 0) ::close(fd);
    }
    throw Error(ErrorKind::kRunner, fmt::format("{}: {}", what, std::strerror(e)));
  };
  if (options.pipe_stdin && ::pipe2(in_pipe, O_CLOEXEC) != 0) fail("pipe");
  if (options.pipe_stdout && ::pipe2(out_pipe, O_CLOEXEC) != 0) fail("pipe");
  if (::pipe2(err_pipe, O_CLOEXEC) != 0) fail("pipe");

  pid_ = ::fork();
  if (pid_ < 0) fail("fork");
  if (pid_ == 0) {
    if (options.pipe_stdin) ::dup2(in_pipe[0], STDIN_FILENO);
    if (options.pipe_stdout) {
      ::dup2(out_pipe[1], STDOUT_FILENO);
    } else {
      ::dup2(STDERR_FILENO, STDOUT_FILENO);
    }
    int err = 0;
    if (!cwd.empty() && ::chdir(cwd.c_str()) != 0) {
      err = errno;
    } else {
      environ = envp.data();
      ::execvp(argv[0], argv.data());
      err = errno;
    }
    [[maybe_unused]] auto n = ::write(err_pipe[1], &err, sizeof(err));
    ::_exit(127);
  }

  close_fd(in_pipe[0]);
  close_fd(out_pipe[1]);
  close_fd(err_pipe[1]);
  stdin_fd_ = in_pipe[1];
  stdout_fd_ = out_pipe[0];

  int child_errno = 0;
  ssize_t n;
  do {
    n = ::read(err_pipe[0], &child_errno, sizeof(child_errno));
  } while (n < 0 && errno == EINTR);
  close_fd(err_pipe[0]);
  if (n == static_cast<ssize_t>(sizeof(child_errno))) {
    try_reap(true);
    close_fd(stdin_fd_);
    close_fd(stdout_fd_);
    throw Error(ErrorKind::kRunner,
                fmt::format("cannot execute '{}'{}: {}", options.argv[0],
                            cwd.empty() ? "" : fmt::format(" in {}", cwd),
                            std::strerror(child_errno)));
  }
  pidfd_ = open_pidfd(pid_);
}

Subprocess::~Subprocess() {
  if (!exit_status_ && pid_ > 0) {
    kill();
    try_reap(true);
  }
  close_fd(stdin_fd_);
  close_fd(stdout_fd_);
  close_fd(pidfd_);
}

void Subprocess::write_line(std::string_view line) {
  if (stdin_fd_ < 0) throw Error(ErrorKind::kRunner, "child stdin is not a pipe");
  std::string data(line);
  data.push_back('\n');
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(stdin_fd_, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorKind::kRunner,
                  fmt::format("cannot write to runner (pid {}): {}", pid_, std::strerror(errno)));
    }
    off += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> Subprocess::read_line(std::chrono::duration<double> timeout) {
  if (stdout_fd_ < 0) throw Error(ErrorKind::kRunner, "child stdout is not a pipe");
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(timeout);
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) return std::nullopt;
    pollfd pfd{stdout_fd_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count() + 1, 1 << 30)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorKind::kRunner, fmt::format("poll failed: {}", std::strerror(errno)));
    }
    if (rc == 0) continue;
    char chunk[4096];
    const ssize_t n = ::read(stdout_fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      throw Error(ErrorKind::kRunner, fmt::format("read failed: {}", std::strerror(errno)));
    }
    if (n == 0) {
      throw Error(ErrorKind::kRunner,
                  fmt::format("runner (pid {}) closed its output unexpectedly", pid_));
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

bool Subprocess::try_reap(bool block) {
  if (exit_status_) return true;
  int status = 0;
  pid_t r;
  do {
    r = ::waitpid(pid_, &status, block ? 0 : WNOHANG);
  } while (r < 0 && errno == EINTR);
  if (r == pid_) {
    exit_status_ = decode_status(status);
    return true;
  }
  return false;
}

std::optional<int> Subprocess::wait_for(std::chrono::duration<double> timeout) {
  if (exit_status_) return exit_status_;
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(timeout);
  while (!try_reap(false)) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) return std::nullopt;
    if (pidfd_ >= 0) {
      pollfd pfd{pidfd_, POLLIN, 0};
      ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count() + 1, 1 << 30)));
    } else {
      std::this_thread::sleep_for(std::chrono::microseconds(200));
    }
  }
  return exit_status_;
}

int Subprocess::wait() {
  try_reap(true);
  return *exit_status_;
}

void Subprocess::close_stdin() { close_fd(stdin_fd_); }

void Subprocess::kill() {
  if (!exit_status_ && pid_ > 0) ::kill(pid_, SIGKILL);
}

}  // namespace srbench::runtime
