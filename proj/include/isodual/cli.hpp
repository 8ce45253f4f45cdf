#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isodual {

// Runs the command-line tool on args (program name excluded). Exit code 0
// on success, 1 on a negative mathematical verdict or failed verification,
// 2 on usage or domain errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace isodual
