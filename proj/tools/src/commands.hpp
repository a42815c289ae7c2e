#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwtower/budget.hpp"
#include "gwtower/perm_group.hpp"
#include "gwtower/simple_groups.hpp"
#include "report.hpp"

namespace gwt::cli {

struct Options {
  std::string command;
  std::vector<std::string> argv;  // arguments after the program name
  std::string spec_path;
  std::string spec_text;          // overrides spec_path when non-empty
  std::size_t level = 0;          // 0: the spec horizon (build) or 1 (verify-kernel)
  unsigned r = 2;
  unsigned d = 2;
  std::uint64_t trials = 0;       // 0: exact count
  std::uint64_t seed = 1;
  Budgets budgets;
  std::size_t horizon = 0;        // 0: the spec horizon
  std::string a;
  std::string b;
  std::string action = "product";
  std::string group;
  std::vector<std::uint64_t> primes;
  std::vector<std::string> phi_values;  // "psl2:1609:2=<value>"
  std::string phi_citation;
  unsigned workers = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

// Runs one command. Errors are captured in Report::error, never thrown.
Report run_command(const Options& opts);
int exit_code(const Report& r);

// "alt:5", "sym:3", "cyclic:4", "psl2:7", "sl2:5", "trivial:2".
PermGroup parse_group_arg(const std::string& text);
std::optional<SimpleGroupId> simple_group_arg(const std::string& text);

const std::vector<std::string>& command_names();

}  // namespace gwt::cli
