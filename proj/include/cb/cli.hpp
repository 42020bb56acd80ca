#ifndef CB_CLI_HPP
#define CB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cb {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 on a domain error, 2 on a parse or
/// usage error. All regular output goes to `out`, diagnostics to `err`;
/// output is byte-identical across runs with identical inputs.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace cb

#endif
