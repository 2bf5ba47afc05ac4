#ifndef RCQ_CLI_HPP
#define RCQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rcq::cli {

enum ExitCode : int { ok = 0, property_failure = 1, input_error = 2, budget_refusal = 3 };

// Arguments exclude the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace rcq::cli

#endif
