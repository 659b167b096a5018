#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cuspbif::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string f1_text;
  std::string f2_text;
  std::uint64_t seed = 0;
  unsigned xi_cap = 64;
  unsigned matrix_attempts = 32;
  OutputFormat output_format = OutputFormat::Text;
  int verbosity = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitInternal = 3;

/// Values read from a key=value input file. Blank lines and lines starting
/// with '#' are skipped; recognized keys are f1, f2 and seed.
struct InputFile {
  std::optional<std::string> f1;
  std::optional<std::string> f2;
  std::optional<std::uint64_t> seed;
};

/// Throws std::invalid_argument naming the offending line.
InputFile parse_input_file(std::string_view contents);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuspbif::cli
