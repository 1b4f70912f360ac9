/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/semiring.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semikit {

enum class TapeMode { two_way, semi_infinite };

struct Transition {
	std::string from;
	std::string read;
	std::string to;
	std::string write;
	int move = 0; // -1, 0 or 1
	Element weight;

	friend bool operator==(const Transition &, const Transition &) = default;
};

/// f(n) = c * n^k + d.
struct TimeBound {
	std::uint64_t c = 0;
	std::uint64_t k = 0;
	std::uint64_t d = 0;

	/// Throws CapExceeded when the value does not fit in 64 bits.
	std::uint64_t at(std::uint64_t n) const;

	friend bool operator==(const TimeBound &, const TimeBound &) = default;
};

/// Raw machine description, as read from a file. Machine validates it.
struct MachineDefinition {
	SemiringHandle semiring = SemiringHandle::boolean();
	TapeMode tape = TapeMode::two_way;
	std::vector<std::string> states;
	std::vector<std::string> input_alphabet;
	std::vector<std::string> work_alphabet;
	std::string blank;
	std::optional<std::string> end_marker;
	std::string initial;
	std::vector<std::string> accepting;
	std::vector<std::string> rejecting;
	std::vector<Transition> transitions;
	std::optional<TimeBound> bound;

	friend bool operator==(const MachineDefinition &, const MachineDefinition &) = default;
};

/// A validated weighted single-tape Turing machine.
///
/// Rules enforced on construction:
///  - states, input and work symbols are distinct tokens; states and work
///    symbols are disjoint; input symbols are single codepoints;
///  - the blank and the end marker are work symbols outside the input
///    alphabet; the end marker is present exactly for semi-infinite tapes;
///  - no transition leaves an accepting state, weights are nonzero and the
///    transition list has no repeated (from, read, to, write, move);
///  - the blank is written only by a transition that reads the blank and
///    does not move right, so such a step leaves the tape unchanged;
///  - on a semi-infinite tape, a transition reading the end marker writes it
///    back and does not move left, and no other transition writes it.
class Machine {
public:
	explicit Machine(MachineDefinition def);

	const MachineDefinition &definition() const noexcept { return def_; }
	const SemiringHandle &semiring() const noexcept { return def_.semiring; }
	TapeMode tape() const noexcept { return def_.tape; }
	const std::vector<std::string> &states() const noexcept { return def_.states; }
	const std::vector<std::string> &input_alphabet() const noexcept { return def_.input_alphabet; }
	const std::vector<std::string> &work_alphabet() const noexcept { return def_.work_alphabet; }
	const std::string &blank() const noexcept { return def_.blank; }
	const std::optional<std::string> &end_marker() const noexcept { return def_.end_marker; }
	const std::string &initial() const noexcept { return def_.initial; }
	const std::vector<std::string> &accepting() const noexcept { return def_.accepting; }
	const std::vector<std::string> &rejecting() const noexcept { return def_.rejecting; }
	const std::vector<Transition> &transitions() const noexcept { return def_.transitions; }
	const std::optional<TimeBound> &bound() const noexcept { return def_.bound; }

	bool is_accepting(const std::string &state) const { return accepting_.count(state) != 0; }
	bool is_rejecting(const std::string &state) const { return rejecting_.count(state) != 0; }
	bool is_state(const std::string &s) const { return state_set_.count(s) != 0; }
	bool is_work_symbol(const std::string &s) const { return symbol_set_.count(s) != 0; }

	/// Indices of the transitions leaving (state, symbol), in list order.
	std::span<const std::size_t> transitions_from(const std::string &state,
						      const std::string &symbol) const;

	friend bool operator==(const Machine &a, const Machine &b) { return a.def_ == b.def_; }

private:
	MachineDefinition def_;
	std::set<std::string> accepting_, rejecting_, state_set_, symbol_set_;
	std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> index_;
};

/// True for a token usable as a state or work symbol name.
bool is_machine_token(std::string_view s);

struct Configuration {
	std::string state;
	std::map<std::int64_t, std::string> tape; // never stores the blank
	std::int64_t head = 0;

	friend auto operator<=>(const Configuration &, const Configuration &) = default;
};

struct Step {
	std::size_t transition;
	Configuration config;

	friend bool operator==(const Step &, const Step &) = default;
};

struct Computation {
	Configuration start;
	std::vector<Step> steps;

	std::size_t length() const noexcept { return steps.size(); }
	const Configuration &last() const { return steps.empty() ? start : steps.back().config; }

	friend bool operator==(const Computation &, const Computation &) = default;
};

/// Ordered product of the transition weights; one for the empty computation.
Element computation_value(const Machine &m, const Computation &g);
bool is_accepting(const Machine &m, const Computation &g);

/// q0 with w written from the leftmost cell (cell 1 after the end marker on
/// a semi-infinite tape) and the head on the first input cell; on empty
/// input the head is on the leftmost blank cell.
Configuration initial_configuration(const Machine &m, std::string_view w);

std::string symbol_at(const Machine &m, const Configuration &c, std::int64_t cell);

/// All one-step successors, in transition list order.
std::vector<std::pair<std::size_t, Configuration>> successors(const Machine &m,
							      const Configuration &c);

/// Semi-infinite tapes only: cells 0 .. e-1 with the state inserted before
/// the head cell, where e = max(last non-blank cell + 1, head).
std::vector<std::string> configuration_word(const Machine &m, const Configuration &c);

/// Throws Validation/DomainError unless w is over the input alphabet.
void check_input(const Machine &m, std::string_view w);

/// The given bound, or f(|w|) from the declared bound. Throws MissingBound.
std::size_t resolve_bound(const Machine &m, std::string_view w,
			  std::optional<std::size_t> bound);

/// All maximal computations on w in depth-first order. Throws BoundExceeded
/// when a computation of length `bound` still has a successor.
std::vector<Computation> enumerate_computations(const Machine &m, std::string_view w,
						std::size_t bound);

/// Sum of the values of the accepting computations on w.
Element behavior_coeff(const Machine &m, std::string_view w,
		       std::optional<std::size_t> bound = std::nullopt);

/// Longest maximal computation on w.
std::size_t time_of(const Machine &m, std::string_view w,
		    std::optional<std::size_t> bound = std::nullopt);

/// Sum over accepting computations of length at most max_steps; longer
/// branches are cut off silently.
Element truncated_behavior(const Machine &m, std::string_view w, std::size_t max_steps);

} // namespace semikit
