#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuecast {

// Parses and runs one command line (program name excluded, natural order).
// Returns the process exit status: 0 on success, 1 on input/validation
// failure, 2 on usage errors. Failures emit one single-line JSON record
// {"error": <code>, "message": ..., "line"?: n} on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cuecast
