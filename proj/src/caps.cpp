/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/caps.hpp"

#include "semikit/error.hpp"

#include <cstdlib>
#include <string>

namespace semikit {

Caps Caps::parse(std::string_view text)
{
	Caps caps;
	std::size_t pos = 0;
	while (pos < text.size()) {
		std::size_t end = text.find(',', pos);
		if (end == std::string_view::npos)
			end = text.size();
		std::string item(text.substr(pos, end - pos));
		pos = end + 1;
		if (item.empty())
			continue;
		auto eq = item.find('=');
		if (eq == std::string::npos)
			throw ParseError("cap '" + item + "' lacks '='");
		std::string key = item.substr(0, eq), value = item.substr(eq + 1);
		if (value.empty() || value.size() > 18 ||
		    value.find_first_not_of("0123456789") != std::string::npos)
			throw ParseError("cap '" + key + "' needs a natural number");
		std::uint64_t n = std::stoull(value);
		if (key == "vars")
			caps.vars = n;
		else if (key == "grid")
			caps.grid = n;
		else if (key == "pal")
			caps.pal = n;
		else if (key == "unit_copies")
			caps.unit_copies = n;
		else
			throw ParseError("unknown cap '" + key + "'");
	}
	return caps;
}

Caps Caps::from_env()
{
	const char *env = std::getenv("SEMIKIT_CAPS");
	return env ? parse(env) : Caps{};
}

} // namespace semikit
