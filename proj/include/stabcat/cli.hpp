#pragma once

// Command-line front end.  Every command writes one JSON document (or a
// lossy text rendering) to `out`; failures write an error document to `err`.
//
// Exit codes: 0 computed, 1 property suite failed, 2 invalid input or an
// unmet precondition, 3 internal assertion.

#include <ostream>
#include <string>
#include <vector>

namespace stabcat {

/// `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

const std::vector<std::string>& command_names();

}  // namespace stabcat
