#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewline {

// Subcommands: run, verify, table, replay. `args` excludes the program name.
// Exit codes: 0 all checks pass, 1 some check or construction failed,
// 2 usage, parse or suite/model mismatch errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewline
