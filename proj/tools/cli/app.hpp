#pragma once

#include <iosfwd>

namespace krull::cli {

// Exit codes: 0 success, 2 computed but an expectation failed, 1 error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krull::cli
