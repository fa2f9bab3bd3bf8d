#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclone::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kCapacity = 3,
};

/// Runs the tool with `args` (excluding the program name). `stop`, when given,
/// is polled by long enumerations; setting it pauses them at the next
/// work-unit boundary.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* stop = nullptr);

} // namespace cyclone::cli
