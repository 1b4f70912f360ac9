/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/machine/constructions.hpp"

#include "semikit/error.hpp"

namespace semikit {

std::string fresh_name(const Machine &m, const std::string &base)
{
	std::string name = base;
	while (m.is_state(name) || m.is_work_symbol(name))
		name += "'";
	return name;
}

namespace {

std::optional<TimeBound> shifted(const std::optional<TimeBound> &b, std::uint64_t extra)
{
	if (!b)
		return std::nullopt;
	return TimeBound{b->c, b->k, b->d + extra};
}

} // namespace

Machine normalize_unit_weights(const Machine &m, std::uint64_t max_weight)
{
	if (m.semiring().kind() != SemiringKind::nat)
		throw DomainError("normalize_unit_weights needs a machine over nat");
	MachineDefinition def = m.definition();
	const Element &one = m.semiring().one();
	def.transitions.clear();
	std::vector<std::string> fresh;
	for (std::size_t e = 0; e < m.transitions().size(); ++e) {
		const Transition &t = m.transitions()[e];
		const BigInt &v = t.weight.as<BigInt>();
		if (v > max_weight)
			throw CapExceeded("weight " + v.str() + " exceeds the unit expansion cap of " +
					  std::to_string(max_weight));
		std::uint64_t copies = static_cast<std::uint64_t>(v);
		for (std::uint64_t i = 1; i <= copies; ++i) {
			std::string mid =
				fresh_name(m, "[" + std::to_string(e) + "," + std::to_string(i) + "]");
			fresh.push_back(mid);
			def.transitions.push_back(Transition{t.from, t.read, mid, t.read, 0, one});
			def.transitions.push_back(Transition{mid, t.read, t.to, t.write, t.move, one});
		}
	}
	def.states.insert(def.states.end(), fresh.begin(), fresh.end());
	if (def.bound)
		def.bound = TimeBound{2 * def.bound->c, def.bound->k, 2 * def.bound->d};
	return Machine(std::move(def));
}

Machine single_accepting(const Machine &m)
{
	MachineDefinition def = m.definition();
	std::string acc = fresh_name(m, "q_acc");
	const Element &one = m.semiring().one();
	for (const auto &f : m.accepting())
		for (const auto &c : m.work_alphabet())
			def.transitions.push_back(Transition{f, c, acc, c, 0, one});
	def.states.push_back(acc);
	def.accepting = {acc};
	def.bound = shifted(def.bound, 1);
	return Machine(std::move(def));
}

Machine gap_machine(const Machine &m)
{
	if (m.semiring().kind() != SemiringKind::boolean)
		throw DomainError("gap_machine needs a machine over bool");
	for (const auto &r : m.rejecting())
		for (const auto &c : m.work_alphabet())
			if (!m.transitions_from(r, c).empty())
				throw ValidationError("rejecting state '" + r + "' has outgoing transitions");
	SemiringHandle z = SemiringHandle::integer();
	const Element plus = z.one();
	const Element minus = z.from_integer(-1);

	MachineDefinition def = m.definition();
	def.semiring = z;
	def.transitions.clear();
	for (const auto &t : m.transitions())
		def.transitions.push_back(Transition{t.from, t.read, t.to, t.write, t.move, plus});
	std::string verdict = fresh_name(m, "q_gap");
	for (const auto &f : m.accepting())
		for (const auto &c : m.work_alphabet())
			def.transitions.push_back(Transition{f, c, verdict, c, 0, plus});
	for (const auto &r : m.rejecting())
		for (const auto &c : m.work_alphabet())
			def.transitions.push_back(Transition{r, c, verdict, c, 0, minus});
	def.states.push_back(verdict);
	def.accepting = {verdict};
	def.rejecting.clear();
	def.bound = shifted(def.bound, 1);
	return Machine(std::move(def));
}

void check_total_verdicts(const Machine &m, std::string_view w, std::optional<std::size_t> bound)
{
	for (const auto &g : enumerate_computations(m, w, resolve_bound(m, w, bound))) {
		const std::string &q = g.last().state;
		if (!m.is_accepting(q) && !m.is_rejecting(q))
			throw MaximalComputationWithoutVerdict(
				"a computation on '" + display_word(w) + "' stops in state '" + q +
				"', which is neither accepting nor rejecting");
	}
}

Machine apply_hom(const Homomorphism &h, const Machine &m)
{
	if (!(m.semiring() == h.source()))
		throw DomainError("homomorphism " + h.name() + " applied to a machine over " +
				  m.semiring().name());
	MachineDefinition def = m.definition();
	def.semiring = h.target();
	def.transitions.clear();
	for (const auto &t : m.transitions()) {
		Element w = h(t.weight);
		if (w.is_zero())
			continue;
		def.transitions.push_back(Transition{t.from, t.read, t.to, t.write, t.move, w});
	}
	return Machine(std::move(def));
}

Element pal_coefficient(std::size_t n, std::size_t cap)
{
	if (n > cap)
		throw CapExceeded("pal_coefficient(" + std::to_string(n) + ") exceeds the cap of " +
				  std::to_string(cap));
	SemiringHandle sr = SemiringHandle::finlang({"a", "b", "#"});
	WordSet words;
	for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
		std::string w;
		for (std::size_t i = 0; i < n; ++i)
			w += (bits >> (n - 1 - i)) & 1 ? 'b' : 'a';
		words.insert(w + "#" + reverse_word(w));
	}
	return sr.make(std::move(words));
}

} // namespace semikit
