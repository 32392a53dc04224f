// Copyright 2026 The benchagg Authors.
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

#include "bench/external_solver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>

#include "bench/bench_io.hpp"
#include "common/error.hpp"

namespace benchagg::bench {
namespace {

struct Fd {
  int fd = -1;
  ~Fd() { Close(); }
  void Close() {
    if (fd >= 0) ::close(fd);
    fd = -1;
  }
};

[[noreturn]] void Protocol(const std::string& msg) {
  Fail(ErrorCode::kProtocol, "external solver: " + msg);
}

}  // namespace

SolveResult ParseAdapterReply(const PseudoBooleanProblem& p, std::string_view reply) {
  Json doc;
  try {
    doc = ParseJson(reply, "adapter reply");
  } catch (const Error& e) {
    Protocol(e.what());
  }
  if (!doc.is_object()) Protocol("reply is not a JSON object");
  if (!doc.contains("assignment")) Protocol("reply has no 'assignment'");

  SolveResult r;
  const Json& a = doc["assignment"];
  if (a.is_string()) {
    for (char c : a.get<std::string>()) {
      if (c != '0' && c != '1') Protocol("assignment string may only contain '0' and '1'");
      r.assignment.push_back(c == '1' ? 1 : 0);
    }
  } else if (a.is_array()) {
    for (const auto& b : a) {
      if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
        Protocol("assignment array may only contain 0 and 1");
      }
      r.assignment.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
  } else {
    Protocol("'assignment' must be a bit string or an array of bits");
  }
  if (r.assignment.size() != p.num_vars()) {
    Protocol("assignment has " + std::to_string(r.assignment.size()) + " bits, expected " +
             std::to_string(p.num_vars()));
  }

  if (!doc.contains("wall_clock_seconds") || !doc["wall_clock_seconds"].is_number()) {
    Protocol("reply has no numeric 'wall_clock_seconds'");
  }
  r.wall_clock_seconds = doc["wall_clock_seconds"].get<double>();
  if (!std::isfinite(r.wall_clock_seconds) || r.wall_clock_seconds < 0.0) {
    Protocol("'wall_clock_seconds' must be a finite non-negative number");
  }
  if (doc.contains("energy_joules") && !doc["energy_joules"].is_null()) {
    if (!doc["energy_joules"].is_number()) Protocol("'energy_joules' must be a number");
    const double e = doc["energy_joules"].get<double>();
    if (!std::isfinite(e) || e <= 0.0) Protocol("'energy_joules' must be positive");
    r.energy_joules = e;
  }
  r.objective = p.Evaluate(r.assignment);
  if (doc.contains("objective")) {
    if (!doc["objective"].is_number()) Protocol("'objective' must be a number");
    const double reported = doc["objective"].get<double>();
    if (std::abs(reported - r.objective) > 1e-6 * std::max(1.0, std::abs(r.objective))) {
      Protocol("reported objective " + std::to_string(reported) +
               " does not match the assignment (" + std::to_string(r.objective) + ")");
    }
  }
  r.solver = Json{{"name", "external"}};
  if (doc.contains("solver")) {
    if (!doc["solver"].is_object()) Protocol("'solver' must be an object");
    r.solver["adapter"] = doc["solver"];
  }
  return r;
}

SolveResult SolveExternal(const PseudoBooleanProblem& p, const ExternalAdapter& adapter) {
  Require(!adapter.argv.empty(), ErrorCode::kInvalidArgument, "external solver: no adapter command");
  Require(adapter.timeout_seconds > 0.0, ErrorCode::kInvalidArgument,
          "external solver: timeout must be positive");
  const std::string input = DumpJson(ProblemToJson(p));

  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) Fail(ErrorCode::kIo, "pipe: " + std::string(std::strerror(errno)));
  Fd in_r{in_pipe[0]}, in_w{in_pipe[1]};
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) Fail(ErrorCode::kIo, "pipe: " + std::string(std::strerror(errno)));
  Fd out_r{out_pipe[0]}, out_w{out_pipe[1]};

  std::vector<char*> argv;
  for (const auto& s : adapter.argv) argv.push_back(const_cast<char*>(s.c_str()));
  argv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) Fail(ErrorCode::kIo, "fork: " + std::string(std::strerror(errno)));
  if (pid == 0) {
    ::dup2(in_r.fd, STDIN_FILENO);
    ::dup2(out_w.fd, STDOUT_FILENO);
    ::execvp(argv[0], argv.data());
    ::_exit(127);
  }
  in_r.Close();
  out_w.Close();

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(adapter.timeout_seconds);
  std::size_t written = 0;
  std::string output;
  bool timed_out = false;
  ::signal(SIGPIPE, SIG_IGN);
  ::fcntl(in_w.fd, F_SETFL, O_NONBLOCK);

  while (out_r.fd >= 0) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                          deadline - std::chrono::steady_clock::now())
                          .count();
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {out_r.fd, POLLIN, 0};
    if (in_w.fd >= 0) fds[count++] = {in_w.fd, POLLOUT, 0};
    const int rc = ::poll(fds, count, static_cast<int>(left));
    if (rc < 0) {
      if (errno == EINTR) continue;
      Fail(ErrorCode::kIo, "poll: " + std::string(std::strerror(errno)));
    }
    if (count > 1 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(in_w.fd, input.data() + written, input.size() - written);
      if (n > 0) written += static_cast<std::size_t>(n);
      if (n < 0 && errno != EAGAIN) written = input.size();  // adapter stopped reading
      if (written == input.size()) in_w.Close();
    }
    if (fds[0].revents & (POLLIN | POLLERR | POLLHUP)) {
      char buf[4096];
      const ssize_t n = ::read(out_r.fd, buf, sizeof buf);
      if (n > 0) {
        output.append(buf, static_cast<std::size_t>(n));
      } else if (n == 0 || errno != EINTR) {
        out_r.Close();
      }
    }
  }

  int status = 0;
  // stdout closed does not mean the adapter has exited.
  while (!timed_out && ::waitpid(pid, &status, WNOHANG) == 0) {
    if (std::chrono::steady_clock::now() >= deadline) {
      timed_out = true;
      break;
    }
    ::usleep(2000);
  }
  if (timed_out) {
    ::kill(pid, SIGKILL);
    ::waitpid(pid, &status, 0);
    Fail(ErrorCode::kTimeout, "external solver: adapter '" + adapter.argv[0] +
                                  "' exceeded its timeout of " +
                                  std::to_string(adapter.timeout_seconds) + " s");
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127) {
      Protocol("could not run adapter '" + adapter.argv[0] + "'");
    }
    Protocol("adapter '" + adapter.argv[0] + "' exited abnormally (status " +
             std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + ")");
  }
  SolveResult r = ParseAdapterReply(p, output);
  r.solver["command"] = adapter.argv;
  return r;
}

}  // namespace benchagg::bench
