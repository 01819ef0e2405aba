#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rspin::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCheckFailed = 2, kScaleLimit = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rspin::cli
