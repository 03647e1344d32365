#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcert {

// Command-line front end. `args` is argv without the program name. Returns
// the process exit code: 0 on success (and passing verifications), 1 when a
// `verify` run fails, 2 on usage, parse or domain errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knotcert
