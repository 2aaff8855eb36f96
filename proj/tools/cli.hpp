#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridwalk::cli {

/// Runs the command line given the argument list (without argv[0]).
/// Exit codes: 0 success, 1 validation/domain error, 2 I/O or parse error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridwalk::cli
