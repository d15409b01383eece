#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fjhawkes {

// Entry point shared by the binary and the tests. args excludes the program
// name. Exit codes: 0 success, 1 usage, 2 configuration or validation
// failure, 3 numerical or I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fjhawkes
