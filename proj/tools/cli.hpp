#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace annarc::cli {

/// Runs one command (args exclude the program name). Returns 0 on success,
/// 1 on usage or domain errors and 2 when a verification suite fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace annarc::cli
