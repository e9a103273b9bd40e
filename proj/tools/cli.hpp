#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hbn::cli {

enum class Command { classify, poset, u, factor, cohomology, verify };
enum class OutputFormat { json, csv, dot, text };

/// Parsed command line; which fields are required depends on the command.
struct RunConfig {
  Command command = Command::classify;
  std::optional<int> g;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> r;
  std::optional<long> u_max;
  std::optional<int> n;
  std::optional<int> e_prime;
  std::string e;       // comma-separated splitting type
  std::string bb;      // a,b,y,u,v
  std::string matrix;  // path
  std::vector<std::string> claims;
  std::uint32_t prime = 101;
  long trials = 100;
  std::uint64_t seed = 0;
  std::optional<OutputFormat> format;
  bool include_nonmaximal = false;
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on argv-style arguments (without the program name).
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbn::cli
