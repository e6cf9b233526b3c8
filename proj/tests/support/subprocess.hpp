#pragma once

// Minimal subprocess helper for CLI tests: run a shell command, capture
// stdout and the exit code.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline RunResult run(const std::string& command) {
  RunResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  std::size_t nread;
  while ((nread = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), nread);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

inline std::string cli_path() {
#ifdef DISTREAL_CLI_PATH
  return DISTREAL_CLI_PATH;
#else
  return "distreal";
#endif
}

}  // namespace testsupport
