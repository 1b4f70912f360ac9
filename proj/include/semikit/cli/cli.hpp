/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semikit {

/// Exit statuses of the command line tool.
enum ExitStatus : int {
	exit_ok = 0,
	exit_mismatch = 1,
	exit_invalid = 2,
	exit_limit = 3,
};

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace semikit
