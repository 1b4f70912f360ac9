/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "support.hpp"

#include "semikit/machine/machine_io.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace semikit::testing {

namespace {

std::uint64_t pick(Rng &rng, std::uint64_t n)
{
	return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

bool coin(Rng &rng, double p = 0.5)
{
	return std::bernoulli_distribution(p)(rng);
}

std::string random_word(Rng &rng, const std::vector<std::string> &alphabet, std::size_t max_len)
{
	std::string w;
	std::size_t len = pick(rng, max_len + 1);
	for (std::size_t i = 0; i < len; ++i)
		w += alphabet[pick(rng, alphabet.size())];
	return w;
}

BigInt random_natural(Rng &rng)
{
	if (coin(rng, 0.1)) {
		BigInt big = 1;
		big <<= 64 + pick(rng, 16);
		return big + pick(rng, 1000);
	}
	return BigInt(pick(rng, 13));
}

} // namespace

Element random_element(const SemiringHandle &sr, Rng &rng)
{
	switch (sr.kind()) {
	case SemiringKind::boolean:
		return sr.make(coin(rng));
	case SemiringKind::nat:
		return sr.make(random_natural(rng));
	case SemiringKind::integer: {
		BigInt v = random_natural(rng);
		return sr.make(coin(rng) ? BigInt(-v) : v);
	}
	case SemiringKind::mod:
		return sr.make(std::uint64_t(pick(rng, sr.modulus())));
	case SemiringKind::fuzzy: {
		if (coin(rng, 0.15))
			return coin(rng) ? sr.zero() : sr.one();
		std::uint64_t q = 1 + pick(rng, 12);
		return sr.make(Rational(BigInt(pick(rng, q + 1)), BigInt(q)));
	}
	case SemiringKind::maxplus_nat:
	case SemiringKind::minplus_nat:
		if (coin(rng, 0.15))
			return sr.zero();
		return sr.make(ExtendedNat{false, BigInt(pick(rng, 21))});
	case SemiringKind::finlang: {
		WordSet s;
		std::size_t n = pick(rng, 4);
		for (std::size_t i = 0; i < n; ++i)
			s.insert(random_word(rng, sr.alphabet(), 2));
		return sr.make(s);
	}
	case SemiringKind::smax:
		if (coin(rng, 0.15))
			return sr.zero();
		return sr.make(RadixWord{random_word(rng, {"0", "1"}, 4)});
	case SemiringKind::free_nat: {
		NatPolynomial p;
		std::size_t n = pick(rng, 4);
		for (std::size_t i = 0; i < n; ++i)
			p[random_word(rng, sr.alphabet(), 2)] += 1 + pick(rng, 3);
		return sr.make(p);
	}
	}
	throw std::logic_error("unknown semiring kind");
}

Term random_term(const SemiringHandle &sr, Rng &rng, std::size_t max_size)
{
	const std::size_t gens = sr.generators().size();
	if (max_size < 3 || coin(rng, 0.25)) {
		std::uint64_t k = pick(rng, gens + 2);
		if (k == 0)
			return Term::zero();
		if (k == 1)
			return Term::one();
		return Term::gen(k - 2);
	}
	std::size_t left = 1 + pick(rng, max_size - 2);
	Term l = random_term(sr, rng, left);
	Term r = random_term(sr, rng, max_size - 1 - l.size());
	return coin(rng) ? Term::sum(l, r) : Term::prod(l, r);
}

Formula random_formula(const SemiringHandle &sr, Rng &rng, const std::vector<std::string> &vars,
		       std::size_t depth)
{
	if (depth == 0 || coin(rng, 0.2)) {
		std::uint64_t k = pick(rng, 5);
		if (k == 0)
			return Formula::constant(random_element(sr, rng));
		const std::string &x = vars[pick(rng, vars.size())];
		return k <= 2 ? Formula::var(x) : Formula::neg_var(x);
	}
	Formula l = random_formula(sr, rng, vars, depth - 1);
	Formula r = random_formula(sr, rng, vars, depth - 1);
	return coin(rng) ? Formula::disj(l, r) : Formula::conj(l, r);
}

Assignment random_assignment(const std::vector<std::string> &vars, Rng &rng)
{
	Assignment v;
	for (const auto &x : vars)
		v.set(x, coin(rng));
	return v;
}

namespace {

// Acyclic two-way skeleton: states q0..q{k-1} plus `extra`, transitions from
// q_i go to later states or to one of the extra states.
MachineDefinition acyclic(const SemiringHandle &sr, Rng &rng, std::size_t k,
			  const std::vector<std::string> &extra, bool every_pair,
			  const std::function<Element()> &weight)
{
	MachineDefinition d;
	d.semiring = sr;
	d.tape = TapeMode::two_way;
	for (std::size_t i = 0; i < k; ++i)
		d.states.push_back("q" + std::to_string(i));
	d.states.insert(d.states.end(), extra.begin(), extra.end());
	d.input_alphabet = {"a", "b"};
	d.work_alphabet = {"_", "a", "b"};
	d.blank = "_";
	d.initial = "q0";
	std::set<std::tuple<std::string, std::string, std::string, std::string, int>> seen;
	for (std::size_t i = 0; i < k; ++i) {
		std::vector<std::string> targets;
		for (std::size_t j = i + 1; j < k; ++j)
			targets.push_back("q" + std::to_string(j));
		targets.insert(targets.end(), extra.begin(), extra.end());
		if (targets.empty())
			continue;
		for (const auto &c : d.work_alphabet) {
			std::size_t n = every_pair ? 1 + pick(rng, 2) : pick(rng, 3);
			for (std::size_t t = 0; t < n; ++t) {
				Transition e{d.states[i], c, targets[pick(rng, targets.size())],
					     coin(rng) ? "a" : "b", int(pick(rng, 3)) - 1, weight()};
				if (seen.insert({e.from, e.read, e.to, e.write, e.move}).second)
					d.transitions.push_back(std::move(e));
			}
		}
	}
	d.bound = TimeBound{0, 0, k + extra.size()};
	return d;
}

} // namespace

Machine random_unit_machine(Rng &rng, std::size_t states)
{
	auto sr = SemiringHandle::nat();
	auto d = acyclic(sr, rng, states, {}, false, [&] { return sr.one(); });
	d.accepting = {d.states.back()};
	return Machine(std::move(d));
}

Machine random_verdict_machine(Rng &rng, std::size_t states)
{
	auto sr = SemiringHandle::boolean();
	auto d = acyclic(sr, rng, states, {"qa", "qr"}, true, [&] { return sr.one(); });
	d.accepting = {"qa"};
	d.rejecting = {"qr"};
	return Machine(std::move(d));
}

Machine random_weighted_machine(const SemiringHandle &sr, Rng &rng, std::size_t states)
{
	auto d = acyclic(sr, rng, states, {}, false, [&] {
		for (;;) {
			Element x = random_element(sr, rng);
			if (!x.is_zero())
				return x;
		}
	});
	d.accepting = {d.states.back()};
	if (coin(rng))
		d.accepting.push_back(d.states[states / 2]);
	if (d.accepting.size() == 2 && d.accepting[0] == d.accepting[1])
		d.accepting.pop_back();
	// Accepting states must not have outgoing transitions.
	std::erase_if(d.transitions, [&](const Transition &t) {
		return std::find(d.accepting.begin(), d.accepting.end(), t.from) != d.accepting.end();
	});
	return Machine(std::move(d));
}

std::string data_path(const std::string &relative)
{
	return std::string(SEMIKIT_DATA_DIR) + "/" + relative;
}

std::vector<CorpusMachine> corpus()
{
	std::vector<std::filesystem::path> files;
	for (const auto &entry : std::filesystem::directory_iterator(data_path("machines")))
		if (entry.path().extension() == ".json")
			files.push_back(entry.path());
	std::sort(files.begin(), files.end());
	std::vector<CorpusMachine> out;
	for (const auto &p : files)
		out.push_back({p.stem().string(), load_machine(p.string())});
	return out;
}

const Machine &corpus_machine(const std::string &name)
{
	static const auto all = corpus();
	for (const auto &c : all)
		if (c.name == name)
			return c.machine;
	throw std::runtime_error("no corpus machine named " + name);
}

std::vector<CorpusMachine> main_corpus()
{
	std::vector<CorpusMachine> out;
	for (const char *name : {"bool_contains_b", "nat_branching", "int_signed", "mod3_branching",
				 "maxplus_branching", "fuzzy_min"})
		out.push_back({name, corpus_machine(name)});
	return out;
}

} // namespace semikit::testing
