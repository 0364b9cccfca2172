#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greenaug {

// Runs one command line (without the program name). Returns the process
// exit code: 0 success, 2 usage, 3 validation, 4 transport. Failures are
// reported on `err` as one line `error: <category>: <message>`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greenaug
