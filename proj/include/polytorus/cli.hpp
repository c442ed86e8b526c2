#ifndef POLYTORUS_CLI_HPP
#define POLYTORUS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polytorus::cli {

// Exit codes: 0 success, 2 usage error, 3 numeric failure (loose bracket or
// ambiguous residual).  args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytorus::cli

#endif
