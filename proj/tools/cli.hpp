#pragma once

#include <string>
#include <vector>

namespace pulsefront::cli {

// Parses argv (without the program name), routes to the library, and maps
// failures to exit codes: 0 success, 2 validation error, 3 numerical error.
int dispatch(const std::vector<std::string>& args);

}  // namespace pulsefront::cli
