/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/machine/machine.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace semikit {

/// Compact machine text with weights as generator terms, then `#w#1^m`.
/// Throws NotFinitelyGenerated for semirings without a generator set and
/// DomainError when the input alphabet contains '#'.
std::string encode_wtmsat(const Machine &m, std::string_view w, std::size_t steps);

struct WtmsatInstance {
	Machine machine;
	std::string word;
	std::size_t steps;
};

/// Inverse of encode_wtmsat. Throws MalformedEncoding.
WtmsatInstance decode_wtmsat(std::string_view encoded);

/// Sum of the values of the accepting computations of length at most m.
Element wtmsat_value(std::string_view encoded);

} // namespace semikit
