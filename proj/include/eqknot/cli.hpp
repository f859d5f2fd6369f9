#pragma once

// Command-line front end. Exit codes: 0 success or verdict obtained,
// 1 validation failure, 2 parse or usage error. Results go to `out`,
// diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace eqknot::cli {

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace eqknot::cli
