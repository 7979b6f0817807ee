#ifndef TDSOLVE_CLI_HPP
#define TDSOLVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tdsolve {

// Runs the command-line tool on the given arguments (without the program
// name). Returns the process exit code: 0 = member, 1 = not a member,
// 2 = usage or input error, 3 = oracle disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tdsolve

#endif
