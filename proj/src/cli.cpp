/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/cli/cli.hpp"

#include "semikit/algebra/word.hpp"
#include "semikit/caps.hpp"
#include "semikit/error.hpp"
#include "semikit/logic/artifact.hpp"
#include "semikit/machine/constructions.hpp"
#include "semikit/machine/machine_io.hpp"
#include "semikit/reduce/reduction.hpp"
#include "semikit/reduce/wtmsat.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

namespace semikit {

namespace {

struct Options {
	std::string machine;
	std::string word;
	std::optional<std::size_t> bound;
	std::size_t max_len = 0;
	std::string semiring;
	std::string formula;
	std::string artifact;
	std::string strategy = "brute";
	std::string output;
	std::string input;
	bool encode = false;
	std::size_t steps = 0;
	std::string mode;
};

std::string input_word(const std::string &text)
{
	return undisplay_word(text);
}

// Writes text to path, or to out when path is empty.
void emit(std::ostream &out, const std::string &path, const std::string &text)
{
	if (path.empty())
		out << text;
	else
		write_text_file(path, text);
}

int cmd_eval_machine(const Options &o, std::ostream &out)
{
	Machine m = load_machine(o.machine);
	out << behavior_coeff(m, input_word(o.word), o.bound).to_string() << "\n";
	return exit_ok;
}

int cmd_behavior(const Options &o, std::ostream &out)
{
	Machine m = load_machine(o.machine);
	for (const auto &w : all_words(m.input_alphabet(), o.max_len))
		out << quote_word(display_word(w)) << "\t"
		    << behavior_coeff(m, w, o.bound).to_string() << "\n";
	return exit_ok;
}

ReductionArtifact load_artifact(const SemiringHandle &sr, const Options &o)
{
	std::string meta = o.artifact;
	if (meta.empty()) {
		std::filesystem::path p(o.formula);
		if (p.extension() == ".formula")
			meta = p.replace_extension(".artifact.json").string();
		if (meta.empty() || !std::filesystem::exists(meta))
			throw ValidationError("strategy '" + o.strategy +
					      "' needs --artifact with the grid metadata");
	}
	auto art = read_artifact(read_text_file(o.formula), read_text_file(meta));
	if (!(art.semiring == sr))
		throw MixedSemiringError("artifact is over " + art.semiring.name() + ", not " +
					 sr.name());
	return art;
}

int cmd_sat(const Options &o, std::ostream &out)
{
	auto sr = SemiringHandle::parse(o.semiring);
	Caps caps = Caps::from_env();
	Element value = sr.zero();
	if (o.strategy == "brute")
		value = sat_value_brute(sr, Formula::parse(sr, read_text_file(o.formula)), caps.vars);
	else if (o.strategy == "onehot")
		value = sat_value_onehot(sr, load_artifact(sr, o));
	else
		value = sat_value_layered(sr, load_artifact(sr, o));
	out << value.to_string() << "\n";
	return exit_ok;
}

int cmd_reduce(const Options &o, std::ostream &out)
{
	NormalFormMachine nf(load_machine(o.machine));
	auto art = cook_levin_reduce(nf, input_word(o.word), Caps::from_env());
	const std::string formula_path = o.output + ".formula";
	const std::string meta_path = o.output + ".artifact.json";
	write_text_file(formula_path, art.formula.to_string() + "\n");
	write_text_file(meta_path, artifact_metadata(art));
	out << "wrote " << formula_path << " (" << art.formula.size() << " nodes, "
	    << art.grid.variable_count() << " variables) and " << meta_path << "\n";
	return exit_ok;
}

int cmd_verify_reduction(const Options &o, std::ostream &out)
{
	NormalFormMachine nf(load_machine(o.machine));
	const auto &sr = nf.semiring();
	Caps caps = Caps::from_env();
	bool all_ok = true;
	out << "word\tbehavior\tsat\tstatus\n";
	for (const auto &w : all_words(nf.machine().input_alphabet(), o.max_len)) {
		Element want = behavior_coeff(nf.machine(), w);
		auto art = cook_levin_reduce(nf, w, caps);
		Element got = o.strategy == "onehot" ? sat_value_onehot(sr, art)
						     : sat_value_layered(sr, art);
		bool ok = want == got;
		all_ok = all_ok && ok;
		out << quote_word(display_word(w)) << "\t" << want.to_string() << "\t"
		    << got.to_string() << "\t" << (ok ? "ok" : "MISMATCH") << "\n";
	}
	return all_ok ? exit_ok : exit_mismatch;
}

int cmd_wtmsat(const Options &o, std::ostream &out)
{
	if (o.encode) {
		if (o.machine.empty())
			throw ValidationError("--encode needs -m");
		out << encode_wtmsat(load_machine(o.machine), input_word(o.word), o.steps) << "\n";
		return exit_ok;
	}
	if (o.input.empty())
		throw ValidationError("wtmsat needs -i STRING|FILE or --encode");
	std::string text = o.input;
	std::error_code ec;
	if (std::filesystem::is_regular_file(text, ec))
		text = read_text_file(text);
	while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
		text.pop_back();
	out << wtmsat_value(text).to_string() << "\n";
	return exit_ok;
}

int cmd_normalize(const Options &o, std::ostream &out)
{
	Machine m = load_machine(o.machine);
	Machine n = o.mode == "unit-nat"
			    ? normalize_unit_weights(m, Caps::from_env().unit_copies)
			    : single_accepting(m);
	emit(out, o.output, serialize_machine(n) + "\n");
	return exit_ok;
}

int cmd_gap(const Options &o, std::ostream &out)
{
	emit(out, o.output, serialize_machine(gap_machine(load_machine(o.machine))) + "\n");
	return exit_ok;
}

int cmd_semirings(std::ostream &out)
{
	for (const auto &sr : standard_instances()) {
		out << sr.name() << "\t" << sr.literal_syntax() << "\t"
		    << (sr.finitely_generated() ? "finitely generated" : "not finitely generated")
		    << "\n";
	}
	out << "\nother instances: mod(k) for k >= 2, fuzzy(min|product|lukasiewicz),\n"
	    << "finlang(letters), free-nat(letters)\n";
	return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Weighted machines, semiring SAT and the reduction between them", "semikit"};
	app.require_subcommand(1, 1);
	Options o;

	auto *eval = app.add_subcommand("eval-machine", "coefficient of one word");
	eval->add_option("-m,--machine", o.machine, "machine file")->required();
	eval->add_option("-w,--word", o.word, "input word (ε or \"\" for the empty word)")
		->required();
	eval->add_option("--bound", o.bound, "step bound overriding the declared one");

	auto *behavior = app.add_subcommand("behavior", "coefficients of all words up to a length");
	behavior->add_option("-m,--machine", o.machine, "machine file")->required();
	behavior->add_option("--max-len", o.max_len, "longest word")->required();
	behavior->add_option("--bound", o.bound, "step bound overriding the declared one");

	auto *sat = app.add_subcommand("sat", "sum of a formula over all assignments");
	sat->add_option("-s,--semiring", o.semiring, "semiring, e.g. nat or mod(3)")->required();
	sat->add_option("-f,--formula", o.formula, "formula file")->required();
	sat->add_option("--strategy", o.strategy, "brute, onehot or layered")
		->check(CLI::IsMember({"brute", "onehot", "layered"}));
	sat->add_option("--artifact", o.artifact, "grid metadata for onehot and layered");

	auto *reduce = app.add_subcommand("reduce", "formula whose SAT value is a coefficient");
	reduce->add_option("-m,--machine", o.machine, "normal form machine file")->required();
	reduce->add_option("-w,--word", o.word, "input word")->required();
	reduce->add_option("-o,--output", o.output, "output prefix")->required();

	auto *verify = app.add_subcommand("verify-reduction",
					  "compare behavior and SAT value for all short words");
	verify->add_option("-m,--machine", o.machine, "normal form machine file")->required();
	verify->add_option("--max-len", o.max_len, "longest word")->required();
	verify->add_option("--strategy", o.strategy, "layered or onehot")
		->check(CLI::IsMember({"layered", "onehot"}));

	auto *wtmsat = app.add_subcommand("wtmsat", "evaluate or build <machine>#w#1^m");
	wtmsat->add_option("-i,--input", o.input, "encoded instance or a file holding it");
	wtmsat->add_flag("--encode", o.encode, "print the encoding of -m, -w and --steps");
	wtmsat->add_option("-m,--machine", o.machine, "machine file to encode");
	wtmsat->add_option("-w,--word", o.word, "input word to encode");
	wtmsat->add_option("--steps", o.steps, "step limit to encode");

	auto *normalize = app.add_subcommand("normalize", "unit weights or a single accepting state");
	normalize->add_option("-m,--machine", o.machine, "machine file")->required();
	normalize->add_option("--mode", o.mode, "unit-nat or single-accept")
		->required()
		->check(CLI::IsMember({"unit-nat", "single-accept"}));
	normalize->add_option("-o,--output", o.output, "output file (default: stdout)");

	auto *gap = app.add_subcommand("gap", "accepting minus rejecting runs, over int");
	gap->add_option("-m,--machine", o.machine, "machine file over bool")->required();
	gap->add_option("-o,--output", o.output, "output file (default: stdout)");

	auto *semirings = app.add_subcommand("semirings", "list instances and literal syntax");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_invalid;
	}

	try {
		if (eval->parsed())
			return cmd_eval_machine(o, out);
		if (behavior->parsed())
			return cmd_behavior(o, out);
		if (sat->parsed())
			return cmd_sat(o, out);
		if (reduce->parsed())
			return cmd_reduce(o, out);
		if (verify->parsed()) {
			if (o.strategy == "brute")
				o.strategy = "layered";
			return cmd_verify_reduction(o, out);
		}
		if (wtmsat->parsed())
			return cmd_wtmsat(o, out);
		if (normalize->parsed())
			return cmd_normalize(o, out);
		if (gap->parsed())
			return cmd_gap(o, out);
		if (semirings->parsed())
			return cmd_semirings(out);
	} catch (const Error &e) {
		err << "error: " << e.what() << "\n";
		return e.category() == ErrorCategory::resource_limit ? exit_limit : exit_invalid;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return exit_invalid;
	}
	return exit_invalid;
}

} // namespace semikit
