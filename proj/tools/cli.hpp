#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nspat::cli {

/// Runs the full command-line surface. Returns the process exit code:
/// 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nspat::cli
