/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/reduce/wtmsat.hpp"

#include "semikit/error.hpp"
#include "semikit/machine/machine_io.hpp"

namespace semikit {

std::string encode_wtmsat(const Machine &m, std::string_view w, std::size_t steps)
{
	for (const auto &s : m.input_alphabet())
		if (s == "#")
			throw DomainError("'#' separates the encoding and cannot be an input symbol");
	check_input(m, w);
	std::string out = serialize_machine(m, WeightFormat::term, true);
	out += '#';
	out += w;
	out += '#';
	out.append(steps, '1');
	return out;
}

WtmsatInstance decode_wtmsat(std::string_view encoded)
{
	auto last = encoded.rfind('#');
	if (last == std::string_view::npos || last == 0)
		throw MalformedEncoding("expected <machine>#<word>#1^m");
	auto mid = encoded.rfind('#', last - 1);
	if (mid == std::string_view::npos)
		throw MalformedEncoding("expected <machine>#<word>#1^m");
	std::string_view ones = encoded.substr(last + 1);
	if (ones.find_first_not_of('1') != std::string_view::npos)
		throw MalformedEncoding("step count must be written in unary with '1'");
	std::string word(encoded.substr(mid + 1, last - mid - 1));
	try {
		Machine m = parse_machine(encoded.substr(0, mid), WeightFormat::term);
		check_input(m, word);
		return WtmsatInstance{std::move(m), std::move(word), ones.size()};
	} catch (const Error &e) {
		throw MalformedEncoding(std::string("bad encoding: ") + e.what());
	}
}

Element wtmsat_value(std::string_view encoded)
{
	auto inst = decode_wtmsat(encoded);
	return truncated_behavior(inst.machine, inst.word, inst.steps);
}

} // namespace semikit
