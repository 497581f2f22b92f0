#pragma once

#include <iosfwd>

namespace kodaira {

// Command line driver. Returns the process exit code: 0 on success, 2 on
// schema or usage errors, 3 on mathematical precondition violations, 4 on
// internal invariant breaches. Output is deterministic: identical inputs
// produce byte-identical reports regardless of thread count.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kodaira
