#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace nnsdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<double> alpha;
  int samples = 20;
  int points = 50;
  double tol = 1e-6;
  std::map<std::string, double> tolerances;
  std::string emit = "C";
  std::string form = "reduced";
  std::string input;
  std::optional<std::uint64_t> seed;
  int max_n = 4;
  int max_count = 5;
  std::string output;
  std::string format = "json";
};

// Names accepted by --tolerance, with their defaults.
std::map<std::string, double> default_tolerances();

// Throws nnsdist::InvalidArgument describing the first problem.
void validate(const RunConfig& config);

// Writes the report to config.output (relative paths resolve under
// $NNSDIST_OUTPUT_DIR when set) or to `out`. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nnsdist::cli
