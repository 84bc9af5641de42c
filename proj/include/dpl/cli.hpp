#ifndef DPL_CLI_HPP
#define DPL_CLI_HPP

#include <ostream>

namespace dpl {

/// Exit codes: 0 success (or "entailed" / "proof valid"), 1 negative answer
/// from entails or check, 2 usage, parse or input errors, 3 resource caps
/// (--max-atoms, --max-clauses), 4 internal errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dpl

#endif  // DPL_CLI_HPP
