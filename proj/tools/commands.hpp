#pragma once

#include <filesystem>
#include <vector>

#include "run_config.hpp"

namespace stepwave::cli {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_physics = 2, exit_io = 3 };

struct CommandResult {
  int exit_code = exit_ok;
  std::vector<std::filesystem::path> files;
};

CommandResult cmd_field(const RunConfig& cfg);
CommandResult cmd_forerunner(const RunConfig& cfg);
CommandResult cmd_oracle(const RunConfig& cfg);
CommandResult cmd_reproduce(const RunConfig& cfg);

/// Dispatches on cfg.command() and maps library exceptions onto exit codes,
/// printing the message to stderr.
CommandResult run_command(const RunConfig& cfg);

}  // namespace stepwave::cli
