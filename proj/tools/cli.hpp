#pragma once

#include "toric/limits.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCapability = 2, kMismatch = 3 };

struct RunConfig {
  std::string command;
  std::string type;
  std::string format = "text";
  std::string out;
  std::string route = "both";
  Limits limits;
};

/// Runs one command and writes its artifact to `out` (or to config.out).
/// Diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (program name first) and runs the command.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* tool_version();

}  // namespace toric::cli
