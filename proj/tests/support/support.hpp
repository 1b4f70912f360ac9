/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

// Random generators and corpus access shared by the unit tests and the
// acceptance runner.

#pragma once

#include "semikit/algebra/term.hpp"
#include "semikit/logic/formula.hpp"
#include "semikit/machine/machine.hpp"

#include <random>
#include <string>
#include <vector>

namespace semikit::testing {

using Rng = std::mt19937_64;

/// Random element of sr; small values dominate, with an occasional large
/// one for the unbounded carriers.
Element random_element(const SemiringHandle &sr, Rng &rng);

/// Random term of at most max_size nodes over sr's generators.
Term random_term(const SemiringHandle &sr, Rng &rng, std::size_t max_size);

/// Random formula over the given variables with constants from sr.
Formula random_formula(const SemiringHandle &sr, Rng &rng,
		       const std::vector<std::string> &vars, std::size_t depth);

/// Random assignment of every variable in vars.
Assignment random_assignment(const std::vector<std::string> &vars, Rng &rng);

/// Acyclic two-way machine over nat with all weights 1: states q0..q{k-1},
/// transitions only to later states, last state accepting.
Machine random_unit_machine(Rng &rng, std::size_t states);

/// Acyclic machine over bool in which every maximal computation ends in qa
/// (accepting) or qr (rejecting).
Machine random_verdict_machine(Rng &rng, std::size_t states);

/// Acyclic two-way machine with random weights from sr; halts within
/// `states` steps and declares that as its bound.
Machine random_weighted_machine(const SemiringHandle &sr, Rng &rng, std::size_t states);

struct CorpusMachine {
	std::string name; // file stem
	Machine machine;
};

/// Every machine in data/machines, by file name.
std::vector<CorpusMachine> corpus();
const Machine &corpus_machine(const std::string &name);

/// The six normal-form machines over bool, nat, int, mod(3), maxplus-nat
/// and fuzzy(min).
std::vector<CorpusMachine> main_corpus();

std::string data_path(const std::string &relative);

} // namespace semikit::testing
