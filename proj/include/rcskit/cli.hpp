#ifndef RCSKIT_CLI_HPP
#define RCSKIT_CLI_HPP

#include <string>
#include <vector>

namespace rcskit::cli {

// Runs one CLI invocation (argv without the program name).
// Exit codes: 0 success, 1 validation or domain error, 2 I/O error.
int run(const std::vector<std::string>& args);

} // namespace rcskit::cli

#endif
