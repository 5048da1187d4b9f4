#pragma once

#include <string>
#include <vector>

namespace spinrad::cli {

/// Runs the command-line front end. args excludes the program name.
/// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
/// Errors go to stderr with the prefix "error[config]:" or "error[numeric]:".
int run(const std::vector<std::string>& args);

}  // namespace spinrad::cli
