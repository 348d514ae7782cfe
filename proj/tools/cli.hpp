#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace admgraph::cli {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

/// Runs one admgraph command. args excludes the program name. JSON results go to out,
/// JSON error reports to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace admgraph::cli
