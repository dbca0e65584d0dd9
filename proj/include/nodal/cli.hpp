#pragma once

#include <iosfwd>

namespace nodal {

// Exit codes: 0 success, 1 a check failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nodal
