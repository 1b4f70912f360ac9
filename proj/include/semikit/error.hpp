/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include <stdexcept>
#include <string>

namespace semikit {

// Broad failure class, used by the command line front end to pick an exit
// status.
enum class ErrorCategory {
	invalid_input,   // parse and validation failures
	resource_limit,  // step bounds and configured caps
};

class Error : public std::runtime_error {
public:
	Error(ErrorCategory category, const std::string &what)
		: std::runtime_error(what), category_(category) {}

	ErrorCategory category() const noexcept { return category_; }

private:
	ErrorCategory category_;
};

#define SEMIKIT_DECLARE_ERROR(name, cat)                                      \
	class name : public Error {                                           \
	public:                                                               \
		explicit name(const std::string &what)                        \
			: Error(ErrorCategory::cat, what) {}                  \
	}

SEMIKIT_DECLARE_ERROR(ParseError, invalid_input);
SEMIKIT_DECLARE_ERROR(ValidationError, invalid_input);
SEMIKIT_DECLARE_ERROR(MixedSemiringError, invalid_input);
SEMIKIT_DECLARE_ERROR(DomainError, invalid_input);
SEMIKIT_DECLARE_ERROR(NotFinitelyGenerated, invalid_input);
SEMIKIT_DECLARE_ERROR(MissingBound, invalid_input);
SEMIKIT_DECLARE_ERROR(UnassignedVariable, invalid_input);
SEMIKIT_DECLARE_ERROR(MalformedEncoding, invalid_input);
SEMIKIT_DECLARE_ERROR(GridMismatch, invalid_input);
SEMIKIT_DECLARE_ERROR(NotLayered, invalid_input);
SEMIKIT_DECLARE_ERROR(MaximalComputationWithoutVerdict, invalid_input);
SEMIKIT_DECLARE_ERROR(ComputationTooLong, invalid_input);

SEMIKIT_DECLARE_ERROR(BoundExceeded, resource_limit);
SEMIKIT_DECLARE_ERROR(BoundTooSmall, resource_limit);
SEMIKIT_DECLARE_ERROR(BoundViolation, resource_limit);
SEMIKIT_DECLARE_ERROR(CapExceeded, resource_limit);

#undef SEMIKIT_DECLARE_ERROR

// Variable cap of the brute-force evaluator.
class VarCapExceeded : public CapExceeded {
public:
	using CapExceeded::CapExceeded;
};

// Tableau larger than the configured grid cap.
class GridCapExceeded : public CapExceeded {
public:
	using CapExceeded::CapExceeded;
};

} // namespace semikit
