#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace sigshift::cli {

enum class Status { ok, invalid_input, undefined_result };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload;
  long long elapsed_ms = 0;
};

std::string status_name(Status status);
int exit_code(Status status);

/// Parses argv, runs the selected subcommand, writes the result to `out`
/// (diagnostics to `err`) and returns the process exit code: 0 ok,
/// 1 invalid input, 2 undefined result.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigshift::cli
