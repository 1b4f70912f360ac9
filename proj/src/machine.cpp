/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/machine/machine.hpp"

#include "semikit/error.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace semikit {

std::uint64_t TimeBound::at(std::uint64_t n) const
{
	using limits = std::numeric_limits<std::uint64_t>;
	std::uint64_t p = 1;
	for (std::uint64_t i = 0; i < k; ++i) {
		if (n != 0 && p > limits::max() / n)
			throw CapExceeded("time bound overflows");
		p *= n;
		if (p == 0)
			break;
	}
	if (c != 0 && p > limits::max() / c)
		throw CapExceeded("time bound overflows");
	std::uint64_t v = c * p;
	if (v > limits::max() - d)
		throw CapExceeded("time bound overflows");
	return v + d;
}

bool is_machine_token(std::string_view s)
{
	if (s.empty())
		return false;
	for (char ch : s) {
		unsigned char u = static_cast<unsigned char>(ch);
		if (u <= 0x20 || u == 0x7F || ch == '(' || ch == ')' || ch == '"' || ch == '\\')
			return false;
	}
	return true;
}

namespace {

void check_distinct_tokens(const std::vector<std::string> &xs, const std::string &what)
{
	std::set<std::string> seen;
	for (const auto &x : xs) {
		if (!is_machine_token(x))
			throw ValidationError("invalid " + what + " name '" + x + "'");
		if (!seen.insert(x).second)
			throw ValidationError("duplicate " + what + " '" + x + "'");
	}
}

std::string describe(const Transition &t)
{
	return "(" + t.from + ", " + t.read + ", " + t.to + ", " + t.write + ", " +
	       std::to_string(t.move) + ")";
}

} // namespace

Machine::Machine(MachineDefinition def) : def_(std::move(def))
{
	if (def_.states.empty())
		throw ValidationError("machine has no states");
	check_distinct_tokens(def_.states, "state");
	check_distinct_tokens(def_.input_alphabet, "input symbol");
	check_distinct_tokens(def_.work_alphabet, "work symbol");
	for (const auto &s : def_.input_alphabet)
		if (!is_alphabet_symbol(s))
			throw ValidationError("input symbol '" + s + "' must be a single codepoint");

	state_set_.insert(def_.states.begin(), def_.states.end());
	symbol_set_.insert(def_.work_alphabet.begin(), def_.work_alphabet.end());
	std::set<std::string> input(def_.input_alphabet.begin(), def_.input_alphabet.end());

	for (const auto &s : def_.input_alphabet)
		if (!symbol_set_.count(s))
			throw ValidationError("input symbol '" + s + "' missing from the work alphabet");
	for (const auto &q : def_.states)
		if (symbol_set_.count(q))
			throw ValidationError("'" + q + "' is both a state and a work symbol");

	if (!symbol_set_.count(def_.blank) || input.count(def_.blank))
		throw ValidationError("blank must be a work symbol outside the input alphabet");
	if (def_.tape == TapeMode::semi_infinite) {
		if (!def_.end_marker)
			throw ValidationError("semi-infinite tape needs an end marker");
		const std::string &em = *def_.end_marker;
		if (!symbol_set_.count(em) || input.count(em) || em == def_.blank)
			throw ValidationError(
				"end marker must be a work symbol outside the input alphabet, distinct from the blank");
	} else if (def_.end_marker) {
		throw ValidationError("two-way tape takes no end marker");
	}

	if (!state_set_.count(def_.initial))
		throw ValidationError("initial state '" + def_.initial + "' is not a state");
	for (const auto &q : def_.accepting) {
		if (!state_set_.count(q))
			throw ValidationError("accepting state '" + q + "' is not a state");
		if (!accepting_.insert(q).second)
			throw ValidationError("accepting state '" + q + "' listed twice");
	}
	for (const auto &q : def_.rejecting) {
		if (!state_set_.count(q))
			throw ValidationError("rejecting state '" + q + "' is not a state");
		if (accepting_.count(q))
			throw ValidationError("state '" + q + "' is both accepting and rejecting");
		if (!rejecting_.insert(q).second)
			throw ValidationError("rejecting state '" + q + "' listed twice");
	}

	std::set<std::tuple<std::string, std::string, std::string, std::string, int>> seen;
	for (std::size_t i = 0; i < def_.transitions.size(); ++i) {
		const Transition &t = def_.transitions[i];
		const std::string where = "transition " + describe(t);
		if (!state_set_.count(t.from) || !state_set_.count(t.to))
			throw ValidationError(where + " uses an unknown state");
		if (!symbol_set_.count(t.read) || !symbol_set_.count(t.write))
			throw ValidationError(where + " uses an unknown symbol");
		if (t.move < -1 || t.move > 1)
			throw ValidationError(where + " has a move outside {-1,0,1}");
		if (accepting_.count(t.from))
			throw ValidationError(where + " leaves an accepting state");
		if (!t.weight.belongs_to(def_.semiring))
			throw ValidationError(where + " has a weight outside " + def_.semiring.name());
		if (t.weight.is_zero())
			throw ValidationError(where + " has weight zero");
		if (t.write == def_.blank && (t.read != def_.blank || t.move == 1))
			throw ValidationError(where + " writes the blank");
		if (def_.tape == TapeMode::semi_infinite) {
			const std::string &em = *def_.end_marker;
			if (t.read == em && (t.write != em || t.move == -1))
				throw ValidationError(where + " must keep the end marker and not move left");
			if (t.read != em && t.write == em)
				throw ValidationError(where + " writes the end marker");
		}
		if (!seen.emplace(t.from, t.read, t.to, t.write, t.move).second)
			throw ValidationError(where + " listed twice");
		index_[{t.from, t.read}].push_back(i);
	}
}

std::span<const std::size_t> Machine::transitions_from(const std::string &state,
							const std::string &symbol) const
{
	auto it = index_.find({state, symbol});
	if (it == index_.end())
		return {};
	return it->second;
}

Element computation_value(const Machine &m, const Computation &g)
{
	Element v = m.semiring().one();
	for (const auto &s : g.steps)
		v = v * m.transitions()[s.transition].weight;
	return v;
}

bool is_accepting(const Machine &m, const Computation &g)
{
	return m.is_accepting(g.last().state);
}

void check_input(const Machine &m, std::string_view w)
{
	check_word(w, m.input_alphabet());
}

Configuration initial_configuration(const Machine &m, std::string_view w)
{
	check_input(m, w);
	Configuration c;
	c.state = m.initial();
	std::int64_t first = 0;
	if (m.tape() == TapeMode::semi_infinite) {
		c.tape[0] = *m.end_marker();
		first = 1;
	}
	std::int64_t cell = first;
	for (auto &s : split_symbols(w))
		c.tape[cell++] = std::move(s);
	c.head = first;
	return c;
}

std::string symbol_at(const Machine &m, const Configuration &c, std::int64_t cell)
{
	auto it = c.tape.find(cell);
	return it == c.tape.end() ? m.blank() : it->second;
}

std::vector<std::pair<std::size_t, Configuration>> successors(const Machine &m,
							      const Configuration &c)
{
	std::vector<std::pair<std::size_t, Configuration>> out;
	if (m.is_accepting(c.state))
		return out;
	std::string read = symbol_at(m, c, c.head);
	for (std::size_t i : m.transitions_from(c.state, read)) {
		const Transition &t = m.transitions()[i];
		Configuration next = c;
		next.state = t.to;
		if (t.write == m.blank())
			next.tape.erase(c.head);
		else
			next.tape[c.head] = t.write;
		next.head = c.head + t.move;
		out.emplace_back(i, std::move(next));
	}
	return out;
}

std::vector<std::string> configuration_word(const Machine &m, const Configuration &c)
{
	if (m.tape() != TapeMode::semi_infinite)
		throw DomainError("configuration words exist for semi-infinite tapes only");
	std::int64_t end = c.head;
	if (!c.tape.empty())
		end = std::max(end, c.tape.rbegin()->first + 1);
	std::vector<std::string> out;
	for (std::int64_t cell = 0; cell < end; ++cell) {
		if (cell == c.head)
			out.push_back(c.state);
		out.push_back(symbol_at(m, c, cell));
	}
	if (c.head == end)
		out.push_back(c.state);
	return out;
}

std::size_t resolve_bound(const Machine &m, std::string_view w, std::optional<std::size_t> bound)
{
	if (bound)
		return *bound;
	if (!m.bound())
		throw MissingBound("no step bound given and the machine declares none");
	return m.bound()->at(word_length(w));
}

namespace {

// Depth-first walk over all computations on w. visit(path, value) is called
// for every maximal computation, and for every computation of length
// max_steps when truncation is allowed.
template <class Visit>
void walk(const Machine &m, std::string_view w, std::size_t max_steps, bool truncate,
	  Visit &&visit)
{
	struct Frame {
		std::vector<std::pair<std::size_t, Configuration>> next;
		std::size_t pos = 0;
		Element value;
	};
	Computation path;
	path.start = initial_configuration(m, w);
	std::vector<Frame> stack;
	stack.push_back(Frame{successors(m, path.start), 0, m.semiring().one()});
	if (stack.back().next.empty())
		visit(path, stack.back().value, true);
	else if (max_steps == 0) {
		if (!truncate)
			throw BoundExceeded("computation on '" + display_word(w) +
					    "' exceeds the bound of 0 steps");
		visit(path, stack.back().value, false);
		return;
	}
	while (!stack.empty()) {
		Frame &top = stack.back();
		if (top.pos == top.next.size()) {
			stack.pop_back();
			if (!path.steps.empty())
				path.steps.pop_back();
			continue;
		}
		auto &[index, config] = top.next[top.pos++];
		Element value = top.value * m.transitions()[index].weight;
		path.steps.push_back(Step{index, config});
		auto next = successors(m, path.steps.back().config);
		if (next.empty()) {
			visit(path, value, true);
			path.steps.pop_back();
			continue;
		}
		if (path.steps.size() >= max_steps) {
			if (!truncate)
				throw BoundExceeded("computation on '" + display_word(w) +
						    "' exceeds the bound of " +
						    std::to_string(max_steps) + " steps");
			visit(path, value, false);
			path.steps.pop_back();
			continue;
		}
		stack.push_back(Frame{std::move(next), 0, std::move(value)});
	}
}

} // namespace

std::vector<Computation> enumerate_computations(const Machine &m, std::string_view w,
						std::size_t bound)
{
	std::vector<Computation> out;
	walk(m, w, bound, false,
	     [&](const Computation &g, const Element &, bool) { out.push_back(g); });
	return out;
}

Element behavior_coeff(const Machine &m, std::string_view w, std::optional<std::size_t> bound)
{
	std::size_t b = resolve_bound(m, w, bound);
	Element total = m.semiring().zero();
	walk(m, w, b, false, [&](const Computation &g, const Element &v, bool) {
		if (m.is_accepting(g.last().state))
			total = total + v;
	});
	return total;
}

std::size_t time_of(const Machine &m, std::string_view w, std::optional<std::size_t> bound)
{
	std::size_t b = resolve_bound(m, w, bound);
	std::size_t best = 0;
	walk(m, w, b, false, [&](const Computation &g, const Element &, bool) {
		best = std::max(best, g.length());
	});
	return best;
}

Element truncated_behavior(const Machine &m, std::string_view w, std::size_t max_steps)
{
	Element total = m.semiring().zero();
	walk(m, w, max_steps, true, [&](const Computation &g, const Element &v, bool maximal) {
		if (maximal && m.is_accepting(g.last().state))
			total = total + v;
	});
	return total;
}

} // namespace semikit
