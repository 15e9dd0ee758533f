#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arck0 {

enum class OutputFormat { json, text };

struct CommandConfig {
  std::string subcommand;
  int n = 1;
  int depth = 4;
  int window = 6;
  std::vector<std::int64_t> anchor_offsets;
  std::vector<std::string> arcs;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;
};

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_bad_input = 2 };

/// Parses argv (without the program name). Returns std::nullopt after printing
/// usage or an error to `err`; `code` then holds the exit status.
std::optional<CommandConfig> parse_command_line(const std::vector<std::string> &args,
                                                std::ostream &out, std::ostream &err,
                                                int &code);

int run(const CommandConfig &config, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace arck0
