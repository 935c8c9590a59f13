#pragma once

#include <ostream>
#include <span>
#include <string>

namespace hkfl::cli {

// Runs one invocation (arguments exclude the program name). Exit codes:
// 0 success, 1 usage error, 2 failed check, 3 overflow or resource cap.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hkfl::cli
