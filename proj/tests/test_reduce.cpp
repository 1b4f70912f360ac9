/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "support.hpp"

#include "semikit/algebra/word.hpp"
#include "semikit/error.hpp"
#include "semikit/machine/machine_io.hpp"
#include "semikit/reduce/many_one.hpp"
#include "semikit/reduce/reduction.hpp"
#include "semikit/reduce/wtmsat.hpp"

#include <doctest.h>

#include <algorithm>

using namespace semikit;
using semikit::testing::Rng;

namespace {

using Rows = std::vector<std::vector<std::string>>;

const std::vector<std::string> noncommutative{"finlang_letters", "freenat_letters", "smax_bits"};

NormalFormMachine normal(const std::string &name)
{
	return NormalFormMachine(semikit::testing::corpus_machine(name));
}

// Stalls recomputed from the transition list.
std::vector<Transition> stalls(const Machine &m)
{
	std::vector<Transition> out;
	for (const auto &p : m.states())
		for (const auto &c : m.work_alphabet()) {
			bool moves = std::any_of(m.transitions().begin(), m.transitions().end(),
						 [&](const Transition &t) {
							 return t.from == p && t.read == c;
						 });
			if (!moves)
				out.push_back(Transition{p, c, p, c, 0, m.semiring().one()});
		}
	return out;
}

// Row after applying e to a padded configuration row, if e applies and the
// result fits.
std::optional<std::vector<std::string>> apply_to_row(const Machine &m,
						     const std::vector<std::string> &row,
						     const Transition &e)
{
	std::vector<std::size_t> at;
	for (std::size_t k = 0; k < row.size(); ++k)
		if (m.is_state(row[k]))
			at.push_back(k);
	if (at.size() != 1)
		return std::nullopt;
	const std::size_t k = at[0];
	const bool inside = k + 1 < row.size();
	const std::string head = inside ? row[k + 1] : m.blank();
	if (row[k] != e.from || head != e.read)
		return std::nullopt;
	auto next = row;
	if (e.move == 1) {
		if (!inside)
			return std::nullopt;
		next[k] = e.write;
		next[k + 1] = e.to;
		return next;
	}
	if (e.move == -1) {
		if (k == 0)
			return std::nullopt;
		next[k - 1] = e.to;
		next[k] = row[k - 1];
	} else {
		next[k] = e.to;
	}
	if (inside)
		next[k + 1] = e.write;
	else if (e.write != m.blank())
		return std::nullopt;
	return next;
}

// Value of the reduction formula on a one-hot tableau, from the tableau
// reading of a computation: init row, one sum of weights per step, and qa
// somewhere in the last row.
Element tableau_value(const NormalFormMachine &nf, const std::string &w, const Rows &rows)
{
	const Machine &m = nf.machine();
	const auto &sr = m.semiring();
	std::vector<std::string> init{*m.end_marker(), m.initial()};
	for (const auto &c : split_symbols(w))
		init.push_back(c);
	init.resize(rows[0].size(), m.blank());
	if (rows[0] != init)
		return sr.zero();

	std::vector<Transition> edges = m.transitions();
	auto extra = stalls(m);
	edges.insert(edges.end(), extra.begin(), extra.end());

	Element value = sr.one();
	for (std::size_t i = 1; i < rows.size(); ++i) {
		Element step = sr.zero();
		for (const auto &e : edges)
			if (apply_to_row(m, rows[i - 1], e) == rows[i])
				step = step + e.weight;
		value = value * step;
	}
	const auto &last = rows.back();
	if (std::find(last.begin(), last.end(), nf.accepting_state()) == last.end())
		return sr.zero();
	return value;
}

Rows random_rows(const Grid &g, Rng &rng)
{
	Rows rows(g.rows(), std::vector<std::string>(g.cols()));
	for (auto &r : rows)
		for (auto &c : r)
			c = g.symbols()[rng() % g.symbols().size()];
	return rows;
}

Assignment assignment_of_rows(const Grid &g, const Rows &rows)
{
	std::vector<std::vector<std::size_t>> idx;
	for (const auto &r : rows) {
		idx.emplace_back();
		for (const auto &c : r)
			idx.back().push_back(g.symbol_index(c));
	}
	return one_hot_assignment(g, idx);
}

} // namespace

TEST_SUITE("reduce") {

TEST_CASE("normal form")
{
	CHECK_NOTHROW(normal("nat_branching"));
	CHECK_THROWS_AS(normal("nat_twoway"), ValidationError);
	MachineDefinition d = semikit::testing::corpus_machine("nat_branching").definition();
	d.bound.reset();
	CHECK_THROWS_AS(NormalFormMachine(Machine(d)), ValidationError);
	d = semikit::testing::corpus_machine("nat_branching").definition();
	d.accepting.clear();
	CHECK_THROWS_AS(NormalFormMachine(Machine(d)), ValidationError);
}

TEST_CASE("stalls")
{
	for (const auto &[name, m] : semikit::testing::corpus()) {
		if (m.tape() != TapeMode::semi_infinite)
			continue;
		CAPTURE(name);
		CHECK(pseudo_transitions(NormalFormMachine(m)) == stalls(m));
	}
	auto nf = normal("nat_branching");
	auto st = pseudo_transitions(nf);
	// q0 on > and the four symbols under qa.
	CHECK(st.size() == 5);
	CHECK(st[0].from == "q0");
	CHECK(st[0].read == ">");
}

TEST_CASE("initial, step and final layers")
{
	auto nf = normal("nat_branching");
	Grid g = reduction_grid(nf, 4);
	CHECK(g.rows() == 5);
	CHECK(g.cols() == 4);
	CHECK(g.symbols() == std::vector<std::string>{">", "_", "a", "b", "q0", "qa"});
	CHECK(build_phi_init(nf, "ab", g).to_string() ==
	      "(and x_0_1_> (and x_0_2_q0 (and x_0_3_a x_0_4_b)))");
	CHECK_THROWS_AS(build_phi_init(nf, "aab", g), BoundTooSmall);
	CHECK(build_phi_fin(nf, g).to_string() ==
	      "(or x_4_1_qa (or x_4_2_qa (or x_4_3_qa x_4_4_qa)))");
	CHECK_THROWS_AS(build_phi_step(nf, 0, g), DomainError);
	CHECK_THROWS_AS(build_phi_step(nf, 5, g), DomainError);
	CHECK_THROWS_AS(build_phi_fin(nf, Grid(2, 2, {"a"})), GridMismatch);

	// One step on "ab": the two transitions from q0 on a.
	auto nat = SemiringHandle::nat();
	Formula step = build_phi_step(nf, 1, g);
	Rows rows{{">", "q0", "a", "b"}, {">", "a", "q0", "b"}, {">", "a", "q0", "b"},
		  {">", "a", "q0", "b"}, {">", "a", "q0", "b"}};
	auto v = assignment_of_rows(g, rows);
	CHECK(eval_formula(nat, step, v) == nat.one());
	rows[1] = {">", "b", "q0", "b"};
	CHECK(eval_formula(nat, step, assignment_of_rows(g, rows)) == nat.from_integer(2));
	rows[1] = {">", "b", "qa", "b"};
	CHECK(eval_formula(nat, step, assignment_of_rows(g, rows)).is_zero());
	// The stall of a machine stuck on > keeps the row.
	rows[0] = {"q0", ">", "a", "b"};
	rows[1] = rows[0];
	CHECK(eval_formula(nat, step, assignment_of_rows(g, rows)) == nat.one());
}

TEST_CASE("small instances")
{
	auto tiny = [](const char *sr, const char *weight) {
		return NormalFormMachine(parse_machine(std::string(R"({"semiring": ")") + sr +
			R"(", "tape": "semi-infinite", "states": ["q0", "qa"],
			"input_alphabet": ["a"], "work_alphabet": [">", "_", "a"], "blank": "_",
			"end_marker": ">", "initial": "q0", "accepting": ["qa"], "transitions": [
			{"from": "q0", "read": "_", "to": "qa", "write": "_", "move": 0, "weight": ")" +
			weight + R"("}], "bound": {"c": 0, "k": 0, "d": 2}})"));
	};
	auto nat = tiny("nat", "3");
	auto art = cook_levin_reduce(nat, "");
	CHECK(art.grid.rows() == 3);
	CHECK(build_phi_init(nat, "", art.grid).to_string() == "(and x_0_1_> x_0_2_q0)");
	CHECK(sat_value_onehot(nat.semiring(), art) == behavior_coeff(nat.machine(), ""));
	CHECK(sat_value_layered(nat.semiring(), art) == SemiringHandle::nat().from_integer(3));
	auto mod2 = tiny("mod(2)", "1");
	CHECK(sat_value_onehot(mod2.semiring(), cook_levin_reduce(mod2, "")).is_one());
	CHECK_THROWS_AS(cook_levin_reduce(nat, "a"), BoundTooSmall);

	// Never accepts: q0 has no move on the blank.
	MachineDefinition d = nat.machine().definition();
	d.transitions[0].read = "a";
	d.transitions[0].write = "a";
	NormalFormMachine stuck{Machine(d)};
	CHECK(sat_value_layered(stuck.semiring(), cook_levin_reduce(stuck, "")).is_zero());

	auto sr = SemiringHandle::nat();
	Grid one_cell(1, 1, {"a", "b"});
	CHECK(build_phi_valid(sr, one_cell).to_string() ==
	      "(or (and x_0_1_a (not x_0_1_b)) (and x_0_1_b (not x_0_1_a)))");
	Grid column(3, 1, nat.grid_symbols());
	CHECK(build_phi_fin(nat, column).to_string() == "x_2_1_qa");
}

TEST_CASE("truncated sums")
{
	// Accepting runs of length 1 (weight 2) and 3 (weight 5).
	Machine m = parse_machine(R"({"semiring": "nat", "tape": "two-way",
		"states": ["q0", "q1", "q2", "qa"], "input_alphabet": ["a"],
		"work_alphabet": ["_", "a"], "blank": "_", "initial": "q0", "accepting": ["qa"],
		"transitions": [
		{"from": "q0", "read": "_", "to": "qa", "write": "_", "move": 0, "weight": "2"},
		{"from": "q0", "read": "_", "to": "q1", "write": "_", "move": 0, "weight": "5"},
		{"from": "q1", "read": "_", "to": "q2", "write": "_", "move": 0, "weight": "1"},
		{"from": "q2", "read": "_", "to": "qa", "write": "_", "move": 0, "weight": "1"}]})");
	auto nat = SemiringHandle::nat();
	CHECK(wtmsat_value(encode_wtmsat(m, "", 0)).is_zero());
	CHECK(wtmsat_value(encode_wtmsat(m, "", 2)) == nat.from_integer(2));
	CHECK(wtmsat_value(encode_wtmsat(m, "", 3)) == nat.from_integer(7));
	CHECK(wtmsat_value(encode_wtmsat(m, "", 9)) == nat.from_integer(7));
}

TEST_CASE("SAT values equal coefficients")
{
	for (const auto &[name, m] : semikit::testing::main_corpus()) {
		CAPTURE(name);
		NormalFormMachine nf(m);
		for (const auto &w : all_words(m.input_alphabet(), 3)) {
			CAPTURE(w);
			auto art = cook_levin_reduce(nf, w);
			Element want = behavior_coeff(m, w);
			CHECK(sat_value_layered(m.semiring(), art) == want);
			if (word_length(w) <= 2)
				CHECK(sat_value_onehot(m.semiring(), art) == want);
		}
	}
}

TEST_CASE("noncommutative semirings keep the step order")
{
	for (const auto &name : noncommutative) {
		CAPTURE(name);
		auto nf = normal(name);
		const auto &sr = nf.semiring();
		for (const auto &w : all_words(nf.machine().input_alphabet(), 2)) {
			CAPTURE(w);
			auto art = cook_levin_reduce(nf, w);
			CHECK(sat_value_layered(sr, art) == behavior_coeff(nf.machine(), w));
			CHECK(sat_value_onehot(sr, art) == behavior_coeff(nf.machine(), w));
		}
	}
}

TEST_CASE("computations and satisfying assignments")
{
	for (const auto &[name, m] : semikit::testing::main_corpus()) {
		CAPTURE(name);
		NormalFormMachine nf(m);
		for (const auto &w : all_words(m.input_alphabet(), 2)) {
			auto art = cook_levin_reduce(nf, w);
			Element total = m.semiring().zero();
			for (const auto &g : enumerate_computations(m, w, art.grid.rows() - 1)) {
				Element v = eval_formula(m.semiring(), art.formula,
							 assignment_of_computation(nf, g, art.grid));
				CHECK(v == (is_accepting(m, g) ? computation_value(m, g)
							       : m.semiring().zero()));
				total = total + v;
			}
			CHECK(total == behavior_coeff(m, w));
		}
	}
}

TEST_CASE("random assignments follow the tableau reading")
{
	Rng rng(31);
	for (const auto &[name, m] : semikit::testing::main_corpus()) {
		CAPTURE(name);
		NormalFormMachine nf(m);
		const std::string w = m.input_alphabet().front() + m.input_alphabet().back();
		auto art = cook_levin_reduce(nf, w);
		const auto &g = art.grid;
		auto runs = enumerate_computations(m, w, g.rows() - 1);
		for (int k = 0; k < 170; ++k) {
			Rows rows;
			if (k % 5 == 0) {
				rows = random_rows(g, rng);
			} else {
				rows = computation_rows(nf, runs[rng() % runs.size()], g);
				for (std::size_t flips = rng() % 3; flips > 0; --flips)
					rows[rng() % g.rows()][rng() % g.cols()] =
						g.symbols()[rng() % g.symbols().size()];
			}
			CHECK(eval_formula(m.semiring(), art.formula, assignment_of_rows(g, rows)) ==
			      tableau_value(nf, w, rows));
		}
		// Not one-hot: one extra variable switched on.
		auto v = assignment_of_computation(nf, runs[0], g);
		v.set(g.variable(0, 1, "_"), true);
		CHECK(eval_formula(m.semiring(), art.formula, v).is_zero());
	}
}

TEST_CASE("layered and one-hot evaluation agree")
{
	Rng rng(32);
	for (int k = 0; k < 6; ++k) {
		for (const auto &[name, m] : semikit::testing::corpus()) {
			if (m.tape() != TapeMode::semi_infinite)
				continue;
			NormalFormMachine nf(m);
			auto words = all_words(m.input_alphabet(), 1);
			auto w = words[rng() % words.size()];
			auto art = cook_levin_reduce(nf, w);
			CHECK(sat_value_layered(m.semiring(), art) == sat_value_onehot(m.semiring(), art));
		}
	}
}

TEST_CASE("layered evaluation rejects other shapes")
{
	auto nf = normal("nat_branching");
	auto art = cook_levin_reduce(nf, "a");
	auto swapped = art;
	std::swap(swapped.layers[1], swapped.layers[2]);
	CHECK_THROWS_AS(sat_value_layered(nf.semiring(), swapped), NotLayered);

	auto factors = art.factors();
	auto cross = art;
	factors[2] = Formula::conj(factors[2], Formula::var(art.grid.variable(3, 1, ">")));
	cross.formula = big_and(nf.semiring(), factors);
	CHECK_THROWS_AS(sat_value_layered(nf.semiring(), cross), NotLayered);
	CHECK_THROWS_AS(sat_value_layered(SemiringHandle::integer(), art), MixedSemiringError);
}

TEST_CASE("formula size")
{
	for (const auto &[name, m] : semikit::testing::corpus()) {
		if (m.tape() != TapeMode::semi_infinite)
			continue;
		CAPTURE(name);
		NormalFormMachine nf(m);
		for (std::size_t n = 0; n <= 3; ++n) {
			std::string w(n, 'a');
			auto art = cook_levin_reduce(nf, w);
			CHECK(art.formula.size() <= reduction_size_bound(nf, art.grid.cols()));
		}
	}
}

TEST_CASE("reduction limits")
{
	auto nf = normal("nat_branching");
	Caps small;
	small.grid = 4;
	CHECK_NOTHROW(cook_levin_reduce(nf, "aa", small));
	CHECK_THROWS_AS(cook_levin_reduce(nf, "aaa", small), GridCapExceeded);
	CHECK_THROWS_AS(cook_levin_reduce(nf, "aaa", small), CapExceeded);

	MachineDefinition d = nf.machine().definition();
	d.bound = TimeBound{0, 0, 1};
	CHECK_THROWS_AS(cook_levin_reduce(NormalFormMachine(Machine(d)), ""), BoundTooSmall);
	d.bound = TimeBound{0, 0, 2};
	CHECK_THROWS_AS(cook_levin_reduce(NormalFormMachine(Machine(d)), "a"), BoundTooSmall);

	// Walking right over blanks forever outruns any bound.
	d.bound = TimeBound{0, 0, 4};
	for (auto &t : d.transitions)
		if (t.read == "_")
			t = Transition{"q0", "_", "q0", "a", 1, t.weight};
	CHECK_THROWS_AS(cook_levin_reduce(NormalFormMachine(Machine(d)), "bb"), BoundViolation);
	CHECK_THROWS_AS(cook_levin_reduce(nf, "c"), DomainError);

	auto art = cook_levin_reduce(nf, "a");
	auto long_run = enumerate_computations(nf.machine(), "aa", 10);
	CHECK_THROWS_AS(computation_rows(nf, long_run.back(), art.grid), ComputationTooLong);
}

TEST_CASE("weighted machine SAT instances")
{
	for (const auto &[name, m] : semikit::testing::corpus()) {
		CAPTURE(name);
		if (!m.semiring().finitely_generated()) {
			CHECK_THROWS_AS(encode_wtmsat(m, "", 1), NotFinitelyGenerated);
			continue;
		}
		for (const auto &w : all_words(m.input_alphabet(), 2)) {
			for (std::size_t steps : {0, 1, 3, 8}) {
				std::string text = encode_wtmsat(m, w, steps);
				CHECK(text.find('\n') == std::string::npos);
				auto inst = decode_wtmsat(text);
				CHECK(inst.machine == m);
				CHECK(inst.word == w);
				CHECK(inst.steps == steps);
				CHECK(wtmsat_value(text) == truncated_behavior(m, w, steps));
			}
			CHECK(wtmsat_value(encode_wtmsat(m, w, 8)) == behavior_coeff(m, w));
		}
	}
	CHECK_THROWS_AS(decode_wtmsat("nonsense"), MalformedEncoding);
	CHECK_THROWS_AS(decode_wtmsat("{}#a#11"), MalformedEncoding);
	auto text = encode_wtmsat(semikit::testing::corpus_machine("nat_branching"), "a", 2);
	CHECK_THROWS_AS(decode_wtmsat(text + "0"), MalformedEncoding);
	CHECK_THROWS_AS(decode_wtmsat(text.substr(0, text.size() - 4) + "#c#1"), MalformedEncoding);
}

TEST_CASE("many-one checks")
{
	auto nf = normal("bool_contains_b");
	const auto &sr = nf.semiring();
	auto words = all_words(nf.machine().input_alphabet(), 3);
	CoefficientOracle behavior = [&](const std::string &w) {
		return behavior_coeff(nf.machine(), w);
	};
	CoefficientOracle sat = [&](const std::string &text) {
		return sat_value_layered(sr, decode_artifact(text));
	};
	WordTransformer reduce = [&](const std::string &w) {
		return encode_artifact(cook_levin_reduce(nf, w));
	};
	auto report = check_many_one(behavior, sat, reduce, words);
	CHECK(report.ok());
	CHECK(report.checked == words.size());

	// Without the final layer every run counts, accepting or not.
	WordTransformer no_fin = [&](const std::string &w) {
		auto art = cook_levin_reduce(nf, w);
		auto factors = art.factors();
		factors.pop_back();
		art.layers.pop_back();
		art.formula = big_and(sr, factors);
		return encode_artifact(art);
	};
	CoefficientOracle sat_onehot = [&](const std::string &text) {
		return sat_value_onehot(sr, decode_artifact(text));
	};
	auto broken = check_many_one(behavior, sat_onehot, no_fin, words);
	CHECK_FALSE(broken.ok());
	REQUIRE(broken.counterexample);
	CHECK(*broken.counterexample == "");
	CHECK(broken.expected->is_zero());
	CHECK(broken.actual->is_one());
	CHECK(broken.to_string().rfind("counterexample", 0) == 0);
}

} // TEST_SUITE
