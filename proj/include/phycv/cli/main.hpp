#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phycv::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kIo = 2, kInternal = 3 };

/// Entry point behind the `phycv` executable. args[0] is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace phycv::cli
