#ifndef HARTOGS_CLI_HPP
#define HARTOGS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hartogs::cli {

/// Dispatches one CLI invocation. Exit codes: 0 success, 1 verification
/// failure, 2 usage error (one-line diagnostic on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hartogs::cli

#endif
