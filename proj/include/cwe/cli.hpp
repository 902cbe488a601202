#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and returns the process exit status:
//   0  every check passed
//   1  a check failed (or an expected enumerator did not match)
//   2  usage error, unreadable config, or parameters outside the hypotheses

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwe/verify.hpp"

namespace cwe {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Enumeration is refused above this q unless --force is given.
inline constexpr std::uint64_t large_q_limit = 10'000'000;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A sweep point plus an optional expected weight enumerator (weight -> count).
struct ConfigPoint {
  PointSpec spec;
  std::optional<std::map<std::uint64_t, std::uint64_t>> expect_we;
};

struct SweepConfig {
  std::vector<ConfigPoint> points;
  VerifyOptions options;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a sweep config. `origin` prefixes diagnostics ("file:line:col" for
/// syntax errors, "file: points[i].field" for schema errors).
SweepConfig parse_sweep_config(const std::string& text, const std::string& origin);
SweepConfig load_sweep_config(const std::string& path);

}  // namespace cwe
