#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace leafpow::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kCapacity = 3 };

struct CommandConfig {
  std::string command;
  // Input files; "-" reads standard input.
  std::string graph_path;
  std::string cert_path;
  std::string tree_path;
  std::string toc_path;
  std::string roles_path;
  std::string matrix_path;
  // Optional artifacts.
  std::string output_path;
  std::string graph_out;
  std::string roles_out;
  std::string dot_path;

  std::size_t q = 1;
  std::int64_t k = 1;
  std::uint64_t seed = 1;
  std::size_t rounds = 100;
  std::size_t threads = 1;
  std::optional<std::size_t> cap;
  std::int64_t ceiling = 1024;
};

// Executes one subcommand. JSON goes to `out`, diagnostics to `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a CommandConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leafpow::cli
