/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/machine/machine_io.hpp"

#include "semikit/algebra/term.hpp"
#include "semikit/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace semikit {

using json = nlohmann::ordered_json;

namespace {

const json &require(const json &obj, const char *key)
{
	auto it = obj.find(key);
	if (it == obj.end())
		throw ParseError(std::string("machine file lacks key '") + key + "'");
	return *it;
}

std::string get_string(const json &v, const char *what)
{
	if (!v.is_string())
		throw ParseError(std::string("'") + what + "' must be a string");
	return v.get<std::string>();
}

std::vector<std::string> get_strings(const json &v, const char *what)
{
	if (!v.is_array())
		throw ParseError(std::string("'") + what + "' must be a list of strings");
	std::vector<std::string> out;
	for (const auto &x : v)
		out.push_back(get_string(x, what));
	return out;
}

std::uint64_t get_natural(const json &v, const char *what)
{
	if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
		throw ParseError(std::string("'") + what + "' must be a natural number");
	return v.get<std::uint64_t>();
}

Element read_weight(const SemiringHandle &sr, const json &v, WeightFormat format)
{
	std::string text;
	if (v.is_string())
		text = v.get<std::string>();
	else if (v.is_number_integer())
		text = std::to_string(v.get<std::int64_t>());
	else
		throw ParseError("transition weight must be a string");
	if (format == WeightFormat::literal)
		return sr.parse_element(text);
	if (!sr.finitely_generated())
		throw NotFinitelyGenerated(sr.name() + " weights cannot be given as terms");
	Term t = Term::parse(text);
	if (t.generator_bound() > sr.generators().size())
		throw ParseError("weight term '" + text + "' uses an unknown generator");
	return eval_term(sr, t);
}

} // namespace

Machine parse_machine(std::string_view text, WeightFormat format)
{
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error &e) {
		throw ParseError(std::string("machine file is not valid JSON: ") + e.what());
	}
	if (!j.is_object())
		throw ParseError("machine file must hold a JSON object");

	MachineDefinition def;
	def.semiring = SemiringHandle::parse(get_string(require(j, "semiring"), "semiring"));
	std::string tape = get_string(require(j, "tape"), "tape");
	if (tape == "two-way")
		def.tape = TapeMode::two_way;
	else if (tape == "semi-infinite")
		def.tape = TapeMode::semi_infinite;
	else
		throw ParseError("tape must be 'two-way' or 'semi-infinite'");
	def.states = get_strings(require(j, "states"), "states");
	def.input_alphabet = get_strings(require(j, "input_alphabet"), "input_alphabet");
	def.work_alphabet = get_strings(require(j, "work_alphabet"), "work_alphabet");
	def.blank = get_string(require(j, "blank"), "blank");
	if (auto it = j.find("end_marker"); it != j.end() && !it->is_null())
		def.end_marker = get_string(*it, "end_marker");
	def.initial = get_string(require(j, "initial"), "initial");
	def.accepting = get_strings(require(j, "accepting"), "accepting");
	if (auto it = j.find("rejecting"); it != j.end() && !it->is_null())
		def.rejecting = get_strings(*it, "rejecting");

	const json &ts = require(j, "transitions");
	if (!ts.is_array())
		throw ParseError("'transitions' must be a list");
	for (const auto &t : ts) {
		if (!t.is_object())
			throw ParseError("each transition must be an object");
		const json &mv = require(t, "move");
		if (!mv.is_number_integer())
			throw ParseError("'move' must be -1, 0 or 1");
		def.transitions.push_back(Transition{
			get_string(require(t, "from"), "from"),
			get_string(require(t, "read"), "read"),
			get_string(require(t, "to"), "to"),
			get_string(require(t, "write"), "write"),
			static_cast<int>(mv.get<std::int64_t>()),
			read_weight(def.semiring, require(t, "weight"), format),
		});
	}
	if (auto it = j.find("bound"); it != j.end() && !it->is_null()) {
		if (!it->is_object())
			throw ParseError("'bound' must be an object {c,k,d}");
		def.bound = TimeBound{get_natural(require(*it, "c"), "c"),
				      get_natural(require(*it, "k"), "k"),
				      get_natural(require(*it, "d"), "d")};
	}
	return Machine(std::move(def));
}

std::string serialize_machine(const Machine &m, WeightFormat format, bool compact)
{
	json j;
	j["semiring"] = m.semiring().name();
	j["tape"] = m.tape() == TapeMode::two_way ? "two-way" : "semi-infinite";
	j["states"] = m.states();
	j["input_alphabet"] = m.input_alphabet();
	j["work_alphabet"] = m.work_alphabet();
	j["blank"] = m.blank();
	j["end_marker"] = m.end_marker() ? json(*m.end_marker()) : json(nullptr);
	j["initial"] = m.initial();
	j["accepting"] = m.accepting();
	if (!m.rejecting().empty())
		j["rejecting"] = m.rejecting();
	json ts = json::array();
	for (const auto &t : m.transitions()) {
		json e;
		e["from"] = t.from;
		e["read"] = t.read;
		e["to"] = t.to;
		e["write"] = t.write;
		e["move"] = t.move;
		e["weight"] = format == WeightFormat::literal
				      ? t.weight.to_string()
				      : encode_tau(m.semiring(), t.weight).to_string();
		ts.push_back(std::move(e));
	}
	j["transitions"] = std::move(ts);
	if (m.bound())
		j["bound"] = json{{"c", m.bound()->c}, {"k", m.bound()->k}, {"d", m.bound()->d}};
	return compact ? j.dump() : j.dump(2) + "\n";
}

std::string read_text_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_text_file(const std::string &path, std::string_view text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw ParseError("cannot write '" + path + "'");
	out << text;
	if (!out)
		throw ParseError("failed writing '" + path + "'");
}

Machine load_machine(const std::string &path)
{
	return parse_machine(read_text_file(path));
}

} // namespace semikit
