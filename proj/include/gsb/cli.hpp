// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_CLI_HPP
#define GSB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gsb::cli {

enum ExitCode : int {
	ok = 0,
	verification_failed = 1,
	usage_error = 2,
	budget_refusal = 3,
	internal_error = 4,
};

/// Runs one invocation. args excludes the program name. Human-readable
/// output goes to out, diagnostics to err; the JSON report goes to the file
/// named by --out when given.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gsb::cli

#endif
