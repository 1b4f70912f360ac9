/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/machine/machine.hpp"

#include <string>
#include <string_view>

namespace semikit {

/// How transition weights are written in a machine file.
enum class WeightFormat {
	literal, // element literal of the machine's semiring
	term,    // term over the canonical generators
};

/// Reads the JSON machine format. Throws ParseError for malformed text and
/// ValidationError for a well-formed but invalid machine.
Machine parse_machine(std::string_view text, WeightFormat format = WeightFormat::literal);

/// Canonical JSON rendering: fixed key order, two-space indent unless
/// compact.
std::string serialize_machine(const Machine &m, WeightFormat format = WeightFormat::literal,
			      bool compact = false);

Machine load_machine(const std::string &path);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

} // namespace semikit
