#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanfree::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (without the program name). Standard streams are injected so the
/// tests can drive the tool in-process.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fanfree::cli
