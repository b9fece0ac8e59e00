#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hopfrad/module_algebra.hpp"

namespace hopfrad {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation_failed = 2;
inline constexpr int parse_failed = 3;
inline constexpr int cap_exceeded = 4;
inline constexpr int contradiction = 5;
}  // namespace exit_code

struct CommandOptions {
  std::uint64_t seed = 0xA1CEB;
  /// Bound on p^dim for every enumeration.
  std::uint64_t cap = 10000;
  /// "json" or "text".
  std::string format = "json";
  /// Overrides the level declared in the definition file.
  std::optional<CheckLevel> check_level;
};

/// What a command prints on stdout, plus diagnostics for stderr.
struct CommandOutput {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

CommandOutput cmd_validate(const std::string& path, const CommandOptions& opts);
/// which: baer, jacobson, brownmccoy, gt, locnil, fisher:<base> or all.
CommandOutput cmd_radical(const std::string& path, const std::string& which, const CommandOptions& opts);
CommandOutput cmd_oracle(const std::string& path, const CommandOptions& opts);
/// Every *.json under dir, in sorted order.
CommandOutput cmd_regress(const std::string& dir, const CommandOptions& opts);
/// Writes every builtin fixture, with its radicals recorded under "expected".
CommandOutput cmd_export_fixtures(const std::string& dir, const CommandOptions& opts);

}  // namespace hopfrad
