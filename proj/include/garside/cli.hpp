#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace garside {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification fails, 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside
