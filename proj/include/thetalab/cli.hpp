#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetalab::cli {

// Parses argv (without the program name), runs the requested operation
// and writes the report to `out`.  Exit codes: 0 verdict computed (even a
// failing verdict), 2 usage error, 3 computation error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetalab::cli
