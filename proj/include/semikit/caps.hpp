/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace semikit {

/// Size limits for the exponential parts of the toolkit.
struct Caps {
	std::size_t vars = 20;          // variables for brute-force SAT
	std::size_t grid = 6;           // largest f(n) the reduction accepts
	std::size_t pal = 14;           // largest n for pal_coefficient
	std::uint64_t unit_copies = 4096; // largest weight normalize expands

	/// Comma separated `key=value` list over vars, grid, pal, unit_copies;
	/// unmentioned keys keep their defaults. Throws ParseError.
	static Caps parse(std::string_view text);

	/// Defaults overridden by the SEMIKIT_CAPS environment variable.
	static Caps from_env();
};

} // namespace semikit
