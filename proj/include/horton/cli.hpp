#pragma once

#include <iosfwd>

namespace horton {

// Full command-line surface of the `horton` binary. Success output is
// buffered and flushed at the end, so a failing command never leaves a
// partial CSV body behind. Returns the process exit code: 0 success,
// 1 domain error, 2 format error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace horton
