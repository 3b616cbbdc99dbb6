#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

// Runs the partstat CLI through the shell and captures stdout (and stderr
// when merge_stderr is set).
struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = false,
                         const std::string& env = {}) {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string("'") + PARTSTAT_CLI + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string data_file(const std::string& name) {
  return std::string("'") + PARTSTAT_TEST_DATA + "/" + name + "'";
}
