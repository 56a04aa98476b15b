#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidlab::cli {

// Exit codes: 0 decided, 2 input error, 3 capacity error, 4 extraction stall, 1 internal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rigidlab::cli
