#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logsym::cli {

/// Exit codes: 0 check passed, 1 check failed with a verdict, 2 usage or
/// parse error.
enum Exit { pass = 0, fail = 1, usage = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// Names of all subcommands, in help order.
const std::vector<std::string>& subcommands();

} // namespace logsym::cli
