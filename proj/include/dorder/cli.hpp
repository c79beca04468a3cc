#ifndef DORDER_CLI_HPP
#define DORDER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dorder {

// Exit codes shared by every subcommand. Predicate commands use Fail;
// the search maps its two non-success outcomes to Certificate and
// Exhaustion.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kFail = 2,
    kCertificate = 3,
    kExhaustion = 4,
};

// Full command dispatcher; `args` excludes the program name. Reports are
// canonical and newline-terminated: identical inputs and seed give
// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dorder

#endif
