#pragma once

#include <iosfwd>

namespace aialo {

// Entry point of the `aialo` command line tool. Exit codes: 0 success,
// 2 usage or validation error, 3 runtime failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aialo
