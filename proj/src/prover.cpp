// Copyright 2026 The qmlstt Authors
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

#include "qmlstt/prover.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstring>

#include "qmlstt/error.hpp"

namespace qml {

std::string_view szs_name(SzsResult::Status s) {
  switch (s) {
    case SzsResult::Status::Theorem:
      return "Theorem";
    case SzsResult::Status::CounterSatisfiable:
      return "CounterSatisfiable";
    case SzsResult::Status::Satisfiable:
      return "Satisfiable";
    case SzsResult::Status::Unknown:
      return "Unknown";
    case SzsResult::Status::Timeout:
      return "Timeout";
    case SzsResult::Status::GaveUp:
      return "GaveUp";
  }
  return "Unknown";
}

SzsResult parse_szs(std::string_view output) {
  SzsResult r;
  size_t pos = 0;
  while (pos <= output.size()) {
    size_t end = output.find('\n', pos);
    if (end == std::string_view::npos) end = output.size();
    std::string_view line = output.substr(pos, end - pos);
    const size_t at = line.find("SZS status");
    if (at != std::string_view::npos) {
      r.excerpt = std::string(line);
      std::string_view rest = line.substr(at + 10);
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      size_t n = 0;
      while (n < rest.size() && std::isalpha(static_cast<unsigned char>(rest[n])) != 0) ++n;
      const std::string_view word = rest.substr(0, n);
      for (auto s : {SzsResult::Status::Theorem, SzsResult::Status::CounterSatisfiable,
                     SzsResult::Status::Satisfiable, SzsResult::Status::Unknown,
                     SzsResult::Status::Timeout, SzsResult::Status::GaveUp}) {
        if (word == szs_name(s)) r.status = s;
      }
      return r;
    }
    if (end == output.size()) break;
    pos = end + 1;
  }
  r.excerpt = std::string(output.substr(0, 400));
  return r;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

SzsResult run_prover(const std::string& command_template, const std::string& file,
                     std::chrono::milliseconds timeout) {
  std::string cmd = command_template;
  const std::string placeholder = "{file}";
  if (const size_t at = cmd.find(placeholder); at != std::string::npos) {
    cmd.replace(at, placeholder.size(), shell_quote(file));
  } else {
    cmd += " " + shell_quote(file);
  }

  int fds[2];
  if (pipe(fds) != 0) throw Error(std::string("pipe failed: ") + std::strerror(errno));
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw Error(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  close(fds[1]);

  std::string output;
  bool timed_out = false;
  char buf[4096];
  while (true) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(timeout - elapsed);
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    const int rc = poll(&p, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (rc < 0 && errno != EINTR) break;
    if (rc <= 0) continue;
    const ssize_t n = read(fds[0], buf, sizeof buf);
    if (n <= 0) break;  // EOF: the process closed its output
    output.append(buf, static_cast<size_t>(n));
  }
  if (timed_out) kill(-pid, SIGKILL);
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);

  SzsResult r = parse_szs(output);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (timed_out) {
    r.status = SzsResult::Status::Timeout;
    return r;
  }
  if (r.exit_code == 127 && output.find("SZS status") == std::string::npos) {
    throw Error("prover command not found: " + cmd);
  }
  return r;
}

}  // namespace qml
