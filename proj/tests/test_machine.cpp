/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "support.hpp"

#include "semikit/algebra/word.hpp"
#include "semikit/error.hpp"
#include "semikit/machine/constructions.hpp"
#include "semikit/machine/machine_io.hpp"

#include <doctest.h>

#include <set>

using namespace semikit;
using semikit::testing::Rng;

namespace {

// Two-way machine text with the given semiring and transition list.
std::string two_way(const std::string &sr, const std::string &transitions,
		    const std::string &states = R"(["q0", "q1", "qa"])",
		    const std::string &extra = "")
{
	return R"({"semiring": ")" + sr + R"(", "tape": "two-way", "states": )" + states +
	       R"(, "input_alphabet": ["a", "b"], "work_alphabet": ["_", "a", "b"], "blank": "_",
	          "initial": "q0", "accepting": ["qa"], "transitions": [)" +
	       transitions + "]" + extra + "}";
}

std::string tr(const char *from, const char *read, const char *to, const char *write, int move,
	       const std::string &weight = "1")
{
	return std::string(R"({"from": ")") + from + R"(", "read": ")" + read + R"(", "to": ")" +
	       to + R"(", "write": ")" + write + R"(", "move": )" + std::to_string(move) +
	       R"(, "weight": ")" + weight + R"("})";
}

// Machine over sr whose only transition leaves q0 on a blank for qa.
Machine one_step(const std::string &sr, const std::string &weight = "1")
{
	return parse_machine(two_way(sr, tr("q0", "_", "qa", "_", 0, weight)));
}

// Independent count of accepting runs: breadth-first expansion of all
// configurations, counted with multiplicity.
std::size_t count_accepting(const Machine &m, const std::string &w, std::size_t bound)
{
	std::vector<Configuration> layer{initial_configuration(m, w)};
	std::size_t count = 0;
	for (std::size_t step = 0; step <= bound && !layer.empty(); ++step) {
		std::vector<Configuration> next;
		for (const auto &c : layer) {
			if (m.is_accepting(c.state))
				++count;
			for (auto &[e, d] : successors(m, c))
				next.push_back(d);
		}
		layer = std::move(next);
	}
	return count;
}

} // namespace

TEST_SUITE("machine") {

TEST_CASE("validation")
{
	CHECK_NOTHROW(one_step("nat"));
	// Transition out of an accepting state.
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("qa", "a", "q0", "a", 0))), ValidationError);
	// Zero weight.
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q0", "a", "qa", "a", 0, "0"))),
			ValidationError);
	// Repeated transition.
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q0", "a", "qa", "a", 0) + "," +
							   tr("q0", "a", "qa", "a", 0, "2"))),
			ValidationError);
	// Blank written over a non-blank, or while moving right.
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q0", "a", "qa", "_", 0))), ValidationError);
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q0", "_", "qa", "_", 1))), ValidationError);
	CHECK_NOTHROW(parse_machine(two_way("nat", tr("q0", "_", "qa", "_", -1))));
	// Bad move.
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q0", "a", "qa", "a", 2))), ValidationError);
	// Unknown state, symbol, state/symbol clash.
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q9", "a", "qa", "a", 0))), ValidationError);
	CHECK_THROWS_AS(parse_machine(two_way("nat", tr("q0", "z", "qa", "a", 0))), ValidationError);
	CHECK_THROWS_AS(parse_machine(two_way("nat", "", R"(["q0", "a", "qa"])")), ValidationError);
	// Weight literal of the wrong carrier.
	CHECK_THROWS(parse_machine(two_way("nat", tr("q0", "a", "qa", "a", 0, "-1"))));
	// End marker on a two-way tape.
	CHECK_THROWS_AS(parse_machine(two_way("nat", "", R"(["q0", "qa"])", R"(, "end_marker": "_")")),
			ValidationError);
	CHECK_THROWS_AS(parse_machine("{"), ParseError);
	CHECK_THROWS_AS(parse_machine(R"({"semiring": "nat"})"), ParseError);
}

TEST_CASE("end marker rules")
{
	auto semi = [](const std::string &transitions) {
		return parse_machine(R"({"semiring": "bool", "tape": "semi-infinite",
			"states": ["q0", "qa"], "input_alphabet": ["a"], "work_alphabet": [">", "_", "a"],
			"blank": "_", "end_marker": ">", "initial": "q0", "accepting": ["qa"],
			"transitions": [)" + transitions + "]}");
	};
	CHECK_NOTHROW(semi(tr("q0", ">", "qa", ">", 1)));
	CHECK_NOTHROW(semi(tr("q0", ">", "qa", ">", 0)));
	CHECK_THROWS_AS(semi(tr("q0", ">", "qa", ">", -1)), ValidationError);
	CHECK_THROWS_AS(semi(tr("q0", ">", "qa", "a", 0)), ValidationError);
	CHECK_THROWS_AS(semi(tr("q0", "a", "qa", ">", 0)), ValidationError);

	Machine m = semi(tr("q0", "a", "q0", "a", -1) + "," + tr("q0", ">", "qa", ">", 1));
	auto c = initial_configuration(m, "a");
	CHECK(c.head == 1);
	CHECK(configuration_word(m, c) == std::vector<std::string>{">", "q0", "a"});
	CHECK(initial_configuration(m, "").head == 1);
	CHECK(configuration_word(m, initial_configuration(m, "")) ==
	      std::vector<std::string>{">", "q0"});
	CHECK(behavior_coeff(m, "a", 5).is_one());
	CHECK(time_of(m, "a", 5) == 2);
}

TEST_CASE("successors")
{
	Machine m = parse_machine(two_way("nat", tr("q0", "a", "q1", "b", 1) + "," +
						 tr("q0", "a", "qa", "a", 0, "2") + "," +
						 tr("q1", "_", "qa", "_", 0)));
	auto c0 = initial_configuration(m, "a");
	CHECK(c0.head == 0);
	auto next = successors(m, c0);
	REQUIRE(next.size() == 2);
	CHECK(next[0].first == 0);
	CHECK(next[0].second.state == "q1");
	CHECK(next[0].second.head == 1);
	CHECK(symbol_at(m, next[0].second, 0) == "b");
	CHECK(next[1].second.state == "qa");
	CHECK(successors(m, next[1].second).empty());
	CHECK(successors(m, next[0].second).size() == 1);
	CHECK(initial_configuration(m, "").head == 0);
	CHECK_THROWS(initial_configuration(m, "c"));
}

TEST_CASE("enumeration")
{
	Machine single = one_step("nat");
	auto runs = enumerate_computations(single, "", 3);
	REQUIRE(runs.size() == 1);
	CHECK(runs[0].length() == 1);
	CHECK(is_accepting(single, runs[0]));

	// Two binary choices in a row.
	Machine branching = parse_machine(two_way(
		"nat", tr("q0", "a", "q1", "a", 1) + "," + tr("q0", "a", "q1", "b", 1) + "," +
			       tr("q1", "_", "qa", "a", 0) + "," + tr("q1", "_", "qa", "b", 0)));
	runs = enumerate_computations(branching, "a", 2);
	CHECK(runs.size() == 4);
	std::set<std::vector<std::size_t>> paths;
	for (const auto &g : runs) {
		CHECK(g.length() == 2);
		std::vector<std::size_t> p;
		Configuration c = g.start;
		for (const auto &s : g.steps) {
			bool found = false;
			for (auto &[e, d] : successors(branching, c))
				found = found || (e == s.transition && d == s.config);
			CHECK(found);
			p.push_back(s.transition);
			c = s.config;
		}
		paths.insert(p);
	}
	CHECK(paths.size() == 4);
	CHECK(behavior_coeff(branching, "a", 2) == SemiringHandle::nat().from_integer(4));

	Machine loop = parse_machine(two_way("nat", tr("q0", "a", "q0", "a", 0)));
	CHECK_THROWS_AS(enumerate_computations(loop, "a", 5), BoundExceeded);
	CHECK_THROWS_AS(behavior_coeff(loop, "a"), MissingBound);
	CHECK(truncated_behavior(loop, "a", 5).is_zero());
}

TEST_CASE("behavior examples")
{
	// Accepts a*: scan right over a, accept at the blank.
	Machine star = parse_machine(two_way("bool", tr("q0", "a", "q0", "a", 1) + "," +
							  tr("q0", "_", "qa", "_", 0)));
	CHECK(behavior_coeff(star, "aa", 10).is_one());
	CHECK(behavior_coeff(star, "ab", 10).is_zero());

	Machine two = parse_machine(two_way("nat", tr("q0", "_", "q1", "_", 0) + "," +
						   tr("q0", "_", "qa", "_", 0) + "," +
						   tr("q1", "_", "qa", "_", -1)));
	CHECK(behavior_coeff(two, "", 5) == SemiringHandle::nat().from_integer(2));

	Machine arctic = parse_machine(two_way("maxplus-nat",
					       tr("q0", "_", "qa", "_", 0, "2") + "," +
						       tr("q0", "_", "qa", "_", -1, "3")));
	CHECK(behavior_coeff(arctic, "", 5) == SemiringHandle::maxplus_nat().parse_element("3"));

	CHECK(time_of(one_step("nat"), "", 5) == 1);
	Machine none = parse_machine(two_way("nat", ""));
	CHECK(time_of(none, "ab", 5) == 0);
	CHECK(behavior_coeff(none, "ab", 5).is_zero());
	Machine three = parse_machine(two_way("nat", tr("q0", "a", "q1", "a", 1) + "," +
						    tr("q1", "b", "q1", "b", 1) + "," +
						    tr("q1", "_", "qa", "_", 0) + "," +
						    tr("q0", "a", "qa", "a", 0)));
	CHECK(time_of(three, "ab", 5) == 3);
}

TEST_CASE("declared bounds")
{
	const Machine &m = semikit::testing::corpus_machine("nat_branching");
	CHECK(m.bound()->at(3) == 5);
	CHECK(resolve_bound(m, "ab", std::nullopt) == 4);
	CHECK(resolve_bound(m, "ab", 9) == 9);
	CHECK_THROWS_AS((TimeBound{2, 70, 0}.at(3)), CapExceeded);
	CHECK(TimeBound{3, 2, 1}.at(4) == 49);
}

TEST_CASE("values are ordered products")
{
	const Machine &m = semikit::testing::corpus_machine("finlang_letters");
	for (const auto &g : enumerate_computations(m, "ab", 10)) {
		Element v = m.semiring().one();
		for (const auto &s : g.steps)
			v = v * m.transitions()[s.transition].weight;
		CHECK(computation_value(m, g) == v);
	}
	// {"a","b"} then {"ab"} then {""}.
	CHECK(behavior_coeff(m, "ab") == m.semiring().parse_element("{\"aab\", \"bab\"}"));
}

TEST_CASE("bool behavior is acceptance")
{
	Rng rng(41);
	for (int k = 0; k < 30; ++k) {
		Machine nat = semikit::testing::random_unit_machine(rng, 4);
		Machine b = apply_hom(Homomorphism::nat_to_bool(), nat);
		for (const auto &w : all_words({"a", "b"}, 3)) {
			Element c = behavior_coeff(b, w);
			bool exists = false;
			for (const auto &g : enumerate_computations(b, w, 4))
				exists = exists || is_accepting(b, g);
			CHECK(c == SemiringHandle::boolean().make(exists));
		}
	}
}

TEST_CASE("unit weights count accepting runs")
{
	Rng rng(5);
	for (int k = 0; k < 20; ++k) {
		Machine m = semikit::testing::random_unit_machine(rng, 4);
		for (const auto &w : all_words({"a", "b"}, 2))
			CHECK(behavior_coeff(m, w) ==
			      SemiringHandle::nat().from_integer(count_accepting(m, w, 4)));
	}
}

TEST_CASE("machine files round trip")
{
	for (const auto &[name, m] : semikit::testing::corpus()) {
		CAPTURE(name);
		CHECK(parse_machine(serialize_machine(m)) == m);
		CHECK(parse_machine(serialize_machine(m, WeightFormat::literal, true)) == m);
		if (m.semiring().finitely_generated())
			CHECK(parse_machine(serialize_machine(m, WeightFormat::term), WeightFormat::term) == m);
		else
			CHECK_THROWS_AS(serialize_machine(m, WeightFormat::term), NotFinitelyGenerated);
		CHECK(serialize_machine(parse_machine(serialize_machine(m))) == serialize_machine(m));
	}
	std::string text = serialize_machine(semikit::testing::corpus_machine("nat_branching"));
	auto pos = [&](const char *key) { return text.find(std::string("\"") + key + "\""); };
	CHECK(pos("semiring") < pos("tape"));
	CHECK(pos("tape") < pos("states"));
	CHECK(pos("initial") < pos("accepting"));
	CHECK(pos("transitions") < pos("bound"));
	CHECK(pos("rejecting") == std::string::npos);
}

TEST_CASE("unit weight normalization")
{
	auto nat = SemiringHandle::nat();
	Machine m1 = one_step("nat");
	Machine n1 = normalize_unit_weights(m1);
	CHECK(n1.transitions().size() == 2);
	CHECK(n1.states().size() == m1.states().size() + 1);
	CHECK(behavior_coeff(n1, "", 4).is_one());

	Machine m3 = one_step("nat", "3");
	Machine n3 = normalize_unit_weights(m3);
	CHECK(behavior_coeff(n3, "", 4) == nat.from_integer(3));
	for (const auto &t : n3.transitions())
		CHECK(t.weight.is_one());

	Machine seq = parse_machine(two_way("nat", tr("q0", "_", "q1", "_", 0, "2") + "," +
						   tr("q1", "_", "qa", "_", 0, "2")));
	CHECK(behavior_coeff(normalize_unit_weights(seq), "", 8) == nat.from_integer(4));
	CHECK_THROWS_AS(normalize_unit_weights(one_step("nat", "9"), 8), CapExceeded);
	CHECK_THROWS_AS(normalize_unit_weights(one_step("int")), DomainError);

	const Machine &corp = semikit::testing::corpus_machine("nat_branching");
	Machine n = normalize_unit_weights(corp);
	CHECK(*n.bound() == TimeBound{2, 1, 4});
	for (const auto &w : all_words({"a", "b"}, 3)) {
		CHECK(behavior_coeff(n, w) == behavior_coeff(corp, w));
		CHECK(time_of(n, w) <= 2 * time_of(corp, w));
	}
}

TEST_CASE("single accepting state")
{
	Machine m = parse_machine(two_way("nat", tr("q0", "a", "q1", "a", 0, "2") + "," +
						 tr("q0", "a", "qa", "a", 0, "3"),
					  R"(["q0", "q1", "qa"])"));
	MachineDefinition d = m.definition();
	d.accepting = {"q1", "qa"};
	Machine two_acc(d);
	Machine s = single_accepting(two_acc);
	CHECK(s.accepting().size() == 1);
	for (const auto &w : all_words({"a", "b"}, 2)) {
		CHECK(behavior_coeff(s, w, 5) == behavior_coeff(two_acc, w, 5));
	}
	CHECK(behavior_coeff(s, "a", 5) == SemiringHandle::nat().from_integer(5));

	Machine already = one_step("nat");
	CHECK(behavior_coeff(single_accepting(already), "", 5).is_one());
	CHECK(time_of(single_accepting(already), "", 5) == 2);

	MachineDefinition nf = already.definition();
	nf.accepting.clear();
	Machine none(nf);
	CHECK(behavior_coeff(single_accepting(none), "", 5).is_zero());
}

TEST_CASE("gap machines")
{
	// Two accepting and one rejecting run on every input.
	Machine m = parse_machine(R"({"semiring": "bool", "tape": "two-way",
		"states": ["q0", "qa", "qb", "qr"], "input_alphabet": ["a"], "work_alphabet": ["_", "a"],
		"blank": "_", "initial": "q0", "accepting": ["qa", "qb"], "rejecting": ["qr"],
		"transitions": [)" + tr("q0", "_", "qa", "_", 0) + "," + tr("q0", "_", "qb", "_", 0) +
				  "," + tr("q0", "_", "qr", "_", 0) + "," + tr("q0", "a", "qa", "a", 0) +
				  "," + tr("q0", "a", "qr", "a", 0) + "," + tr("q0", "a", "qr", "a", 1) +
				  "]}");
	Machine g = gap_machine(m);
	CHECK(g.semiring() == SemiringHandle::integer());
	CHECK(behavior_coeff(g, "", 5) == SemiringHandle::integer().from_integer(1));
	CHECK(behavior_coeff(g, "a", 5) == SemiringHandle::integer().from_integer(-1));

	Rng rng(77);
	for (int k = 0; k < 10; ++k) {
		Machine v = semikit::testing::random_verdict_machine(rng, 3);
		Machine gv = gap_machine(v);
		for (const auto &w : all_words({"a", "b"}, 2)) {
			CHECK_NOTHROW(check_total_verdicts(v, w));
			long acc = 0, rej = 0;
			for (const auto &run : enumerate_computations(v, w, 8))
				(v.is_accepting(run.last().state) ? acc : rej) += 1;
			CHECK(behavior_coeff(gv, w) == SemiringHandle::integer().from_integer(acc - rej));
		}
	}

	Machine open = parse_machine(two_way("bool", tr("q0", "a", "q1", "a", 0)));
	CHECK_THROWS_AS(check_total_verdicts(open, "a", 3), MaximalComputationWithoutVerdict);
	CHECK_THROWS_AS(gap_machine(one_step("nat")), DomainError);
}

TEST_CASE("images of machines")
{
	Machine m = one_step("nat", "4");
	Machine img = apply_hom(Homomorphism::nat_to_mod(2), m);
	CHECK(img.transitions().empty());
	CHECK(behavior_coeff(img, "", 3).is_zero());
	CHECK_THROWS_AS(apply_hom(Homomorphism::nat_to_mod(2), one_step("int")), DomainError);

	const Machine &fm = semikit::testing::corpus_machine("freenat_letters");
	auto nat = SemiringHandle::nat();
	auto h = Homomorphism::free_nat_to(fm.semiring(), nat,
					  {{"a", nat.from_integer(2)}, {"b", nat.from_integer(5)}});
	Machine mh = apply_hom(h, fm);
	for (const auto &w : all_words({"a", "b"}, 3))
		CHECK(h(behavior_coeff(fm, w)) == behavior_coeff(mh, w));
}

TEST_CASE("palindrome coefficients")
{
	auto sr = SemiringHandle::finlang({"a", "b", "#"});
	CHECK(pal_coefficient(0) == sr.parse_element("{\"#\"}"));
	CHECK(pal_coefficient(1) == sr.parse_element("{\"a#a\", \"b#b\"}"));
	auto three = pal_coefficient(3).as<WordSet>();
	CHECK(three.size() == 8);
	for (const auto &w : three) {
		CHECK(w.size() == 7);
		CHECK(reverse_word(w) == w);
		CHECK(w[3] == '#');
	}
	CHECK_THROWS_AS(pal_coefficient(15), CapExceeded);
	CHECK_NOTHROW(pal_coefficient(3, 3));
}

TEST_CASE("fresh names")
{
	Machine m = one_step("nat");
	CHECK(fresh_name(m, "q9") == "q9");
	CHECK(fresh_name(m, "qa") == "qa'");
	CHECK(fresh_name(m, "_") == "_'");
	CHECK(is_machine_token("[0,1]"));
	CHECK_FALSE(is_machine_token("a b"));
	CHECK_FALSE(is_machine_token("(q)"));
}

} // TEST_SUITE
