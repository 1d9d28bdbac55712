#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psbent::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a failed check and 2 on
/// invalid parameters.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psbent::cli
