#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kinertia {

// Runs one command-line invocation. `args` excludes the program name.
// Returns the process exit code: 0 on success, 1 on a usage or input-schema
// violation (the error message names the offending field), 2 when a checked
// identity fails (the output stream carries the counterexample payload).
int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace kinertia
