#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace birat::cli {

enum class Command { curve_invert, surface_invert, moving_matrix, dixon, verify };
enum class Format { text, structured };

struct JobSpec {
  Command command = Command::curve_invert;
  std::string input_path;
  Format format = Format::text;
  unsigned m_max = 3;
  std::optional<std::size_t> marked_column;
  std::uint64_t seed = 0;
  /// Adds wall-clock timing to the report (and so breaks byte-identity).
  bool timing = false;
};

/// Maps "curve-invert", "surface-invert", ... to a Command.
std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

/// Runs one job. The report goes to `out`, diagnostics to `err`.
/// Returns 0 when a verdict is reached, 2 when inconclusive and 1 on error.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace birat::cli
