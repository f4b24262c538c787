#pragma once

#include <iosfwd>

namespace specfm {

// Command-line driver. Exit codes: 0 success, 2 input error,
// 3 mathematically honest "undetermined" outcome (partial output emitted),
// 1 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specfm
