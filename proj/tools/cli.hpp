#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidsep::cli {

// Runs one braidsep command. Results go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 domain error, 2 usage error. `table --published`
// additionally exits 0 only when every reference cell matches.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace braidsep::cli
