/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/reduce/reduction.hpp"

#include "semikit/algebra/word.hpp"
#include "semikit/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace semikit {

NormalFormMachine::NormalFormMachine(Machine m) : m_(std::move(m))
{
	if (m_.tape() != TapeMode::semi_infinite)
		throw ValidationError("normal form needs a semi-infinite tape");
	if (m_.accepting().size() != 1)
		throw ValidationError("normal form needs exactly one accepting state");
	if (!m_.bound())
		throw ValidationError("normal form needs a declared time bound");
}

std::vector<std::string> NormalFormMachine::grid_symbols() const
{
	std::vector<std::string> out = m_.work_alphabet();
	out.insert(out.end(), m_.states().begin(), m_.states().end());
	return out;
}

std::vector<Transition> pseudo_transitions(const NormalFormMachine &nf)
{
	const Machine &m = nf.machine();
	std::vector<Transition> out;
	for (const auto &p : m.states())
		for (const auto &c : m.work_alphabet())
			if (m.transitions_from(p, c).empty())
				out.push_back(Transition{p, c, p, c, 0, m.semiring().one()});
	return out;
}

Grid reduction_grid(const NormalFormMachine &m, std::size_t f)
{
	return Grid(f + 1, f, m.grid_symbols());
}

namespace {

void check_grid(const NormalFormMachine &m, const Grid &grid)
{
	if (grid.symbols() != m.grid_symbols())
		throw GridMismatch("grid symbols differ from the machine's work symbols and states");
}

// Literal builders over one grid.
struct Cells {
	const SemiringHandle &sr;
	const Grid &grid;

	bool has(std::size_t j) const { return j >= 1 && j <= grid.cols(); }
	Formula x(std::size_t i, std::size_t j, const std::string &sym) const
	{
		return Formula::var(grid.variable(i, j, sym));
	}
	Formula not_x(std::size_t i, std::size_t j, const std::string &sym) const
	{
		return Formula::neg_var(grid.variable(i, j, sym));
	}
};

Formula no_state(const Cells &g, const Machine &m, std::size_t i, std::size_t j)
{
	std::vector<Formula> xs;
	for (const auto &q : m.states())
		xs.push_back(g.not_x(i, j, q));
	return big_and(g.sr, xs);
}

// Cell j of row i-1 is copied and no state is near it.
Formula psi_copy(const Cells &g, const Machine &m, std::size_t i, std::size_t j)
{
	std::vector<Formula> parts;
	for (std::size_t jj : {j - 1, j, j + 1})
		if (g.has(jj))
			parts.push_back(no_state(g, m, i - 1, jj));
	std::vector<Formula> same;
	for (const auto &c : m.work_alphabet())
		same.push_back(Formula::conj(g.x(i - 1, j, c), g.x(i, j, c)));
	parts.push_back(big_or(g.sr, same));
	return big_and(g.sr, parts);
}

// Cell j of row i-1 is a neighbour of the state; the rewrite handles it.
Formula psi_skip(const Cells &g, const Machine &m, std::size_t i, std::size_t j)
{
	std::vector<Formula> near;
	for (const auto &q : m.states()) {
		std::vector<Formula> sides;
		if (g.has(j - 1))
			sides.push_back(g.x(i - 1, j - 1, q));
		if (g.has(j + 1))
			sides.push_back(g.x(i - 1, j + 1, q));
		if (!sides.empty())
			near.push_back(big_or(g.sr, sides));
	}
	return Formula::conj(no_state(g, m, i - 1, j), big_or(g.sr, near));
}

// The state p sits in cell j of row i-1 and e rewrites its surroundings.
Formula psi_rewrite(const Cells &g, const Machine &m, std::size_t i, std::size_t j,
		    const Transition &e)
{
	const auto &sr = g.sr;
	const bool left = g.has(j - 1), right = g.has(j + 1);
	if (!left && e.move == -1)
		return Formula::constant(sr.zero());
	auto alpha = [&](const std::string &c1) { return e.move == -1 ? e.to : c1; };
	auto beta = [&](const std::string &c1) {
		return e.move == -1 ? c1 : e.move == 0 ? e.to : e.write;
	};
	const std::string gamma = e.move == 1 ? e.to : e.write;
	if (!right && !(e.read == m.blank() && gamma == m.blank()))
		return Formula::constant(sr.zero());

	auto rewrite = [&](const std::string &c1) {
		std::vector<Formula> xs;
		if (left)
			xs.push_back(g.x(i - 1, j - 1, c1));
		xs.push_back(g.x(i - 1, j, e.from));
		if (right)
			xs.push_back(g.x(i - 1, j + 1, e.read));
		if (left)
			xs.push_back(g.x(i, j - 1, alpha(c1)));
		xs.push_back(g.x(i, j, beta(c1)));
		if (right)
			xs.push_back(g.x(i, j + 1, gamma));
		return big_and(sr, xs);
	};
	if (!left)
		return rewrite(std::string()); // c' unused: move is not -1
	std::vector<Formula> options;
	for (const auto &c1 : m.work_alphabet())
		options.push_back(rewrite(c1));
	return big_or(sr, options);
}

} // namespace

Formula build_phi_init(const NormalFormMachine &nf, std::string_view w, const Grid &grid)
{
	check_grid(nf, grid);
	const Machine &m = nf.machine();
	check_input(m, w);
	auto letters = split_symbols(w);
	if (grid.cols() < letters.size() + 2)
		throw BoundTooSmall("rows of length " + std::to_string(grid.cols()) +
				    " cannot hold the initial configuration of a word of length " +
				    std::to_string(letters.size()));
	Cells g{nf.semiring(), grid};
	std::vector<Formula> xs{g.x(0, 1, *m.end_marker()), g.x(0, 2, m.initial())};
	for (std::size_t j = 3; j <= grid.cols(); ++j)
		xs.push_back(g.x(0, j, j - 3 < letters.size() ? letters[j - 3] : m.blank()));
	return big_and(g.sr, xs);
}

Formula build_phi_step(const NormalFormMachine &nf, std::size_t i, const Grid &grid)
{
	check_grid(nf, grid);
	if (i == 0 || i >= grid.rows())
		throw DomainError("step index " + std::to_string(i) + " outside 1.." +
				  std::to_string(grid.rows() - 1));
	const Machine &m = nf.machine();
	Cells g{nf.semiring(), grid};

	std::vector<Formula> fixed_copy, fixed_skip;
	for (std::size_t j = 1; j <= grid.cols(); ++j) {
		fixed_copy.push_back(psi_copy(g, m, i, j));
		fixed_skip.push_back(psi_skip(g, m, i, j));
	}

	std::vector<Transition> edges = m.transitions();
	auto stalls = pseudo_transitions(nf);
	edges.insert(edges.end(), stalls.begin(), stalls.end());

	std::vector<Formula> branches;
	for (const auto &e : edges) {
		std::vector<Formula> cols;
		for (std::size_t j = 1; j <= grid.cols(); ++j)
			cols.push_back(Formula::disj(
				fixed_copy[j - 1],
				Formula::disj(fixed_skip[j - 1], psi_rewrite(g, m, i, j, e))));
		branches.push_back(Formula::conj(Formula::constant(e.weight), big_and(g.sr, cols)));
	}
	return big_or(g.sr, branches);
}

Formula build_phi_fin(const NormalFormMachine &nf, const Grid &grid)
{
	check_grid(nf, grid);
	Cells g{nf.semiring(), grid};
	std::vector<Formula> xs;
	for (std::size_t j = 1; j <= grid.cols(); ++j)
		xs.push_back(g.x(grid.rows() - 1, j, nf.accepting_state()));
	return big_or(g.sr, xs);
}

ReductionArtifact assemble_reduction(const NormalFormMachine &nf, std::string_view w,
				     const Grid &grid)
{
	const auto &sr = nf.semiring();
	std::vector<Formula> parts{build_phi_valid(sr, grid), build_phi_init(nf, w, grid)};
	std::vector<Layer> layers{{LayerRole::valid}, {LayerRole::init}};
	for (std::size_t i = 1; i < grid.rows(); ++i) {
		parts.push_back(build_phi_step(nf, i, grid));
		layers.push_back({LayerRole::step, i});
	}
	parts.push_back(build_phi_fin(nf, grid));
	layers.push_back({LayerRole::fin});
	return ReductionArtifact{sr, big_and(sr, parts), grid, std::move(layers), std::string(w)};
}

ReductionArtifact cook_levin_reduce(const NormalFormMachine &nf, std::string_view w,
				    const Caps &caps)
{
	const Machine &m = nf.machine();
	check_input(m, w);
	const std::size_t n = word_length(w);
	const std::uint64_t f = nf.bound().at(n);
	if (f < n + 2)
		throw BoundTooSmall("f(" + std::to_string(n) + ") = " + std::to_string(f) +
				    " is below |w| + 2");
	if (f > caps.grid)
		throw GridCapExceeded("f(" + std::to_string(n) + ") = " + std::to_string(f) +
				      " is above the grid cap of " + std::to_string(caps.grid));

	std::vector<Computation> runs;
	try {
		runs = enumerate_computations(m, w, f);
	} catch (const BoundExceeded &) {
		throw BoundViolation("a run on '" + std::string(w) + "' is longer than f = " +
				     std::to_string(f));
	}
	for (const auto &g : runs) {
		auto check = [&](const Configuration &c) {
			if (configuration_word(m, c).size() > f)
				throw BoundViolation("a configuration on '" + std::string(w) +
						     "' is longer than f = " + std::to_string(f));
		};
		check(g.start);
		for (const auto &s : g.steps)
			check(s.config);
	}
	return assemble_reduction(nf, w, reduction_grid(nf, f));
}

std::uint64_t reduction_size_bound(const NormalFormMachine &nf, std::size_t f)
{
	const std::uint64_t s = nf.grid_symbols().size();
	const std::uint64_t delta = nf.machine().transitions().size();
	return reduction_size_constant * f * f * (delta + s) * s * s;
}

std::vector<std::vector<std::string>> computation_rows(const NormalFormMachine &nf,
						       const Computation &g, const Grid &grid)
{
	check_grid(nf, grid);
	const Machine &m = nf.machine();
	if (g.length() + 1 > grid.rows())
		throw ComputationTooLong("computation of length " + std::to_string(g.length()) +
					 " needs more than " + std::to_string(grid.rows()) + " rows");
	std::vector<std::vector<std::string>> rows;
	auto push = [&](const Configuration &c) {
		auto word = configuration_word(m, c);
		if (word.size() > grid.cols())
			throw ComputationTooLong("configuration of length " +
						 std::to_string(word.size()) + " exceeds " +
						 std::to_string(grid.cols()) + " columns");
		word.resize(grid.cols(), m.blank());
		rows.push_back(std::move(word));
	};
	push(g.start);
	for (const auto &s : g.steps)
		push(s.config);
	while (rows.size() < grid.rows())
		rows.push_back(rows.back());
	return rows;
}

Assignment assignment_of_computation(const NormalFormMachine &nf, const Computation &g,
				     const Grid &grid)
{
	auto rows = computation_rows(nf, g, grid);
	std::vector<std::vector<std::size_t>> idx(rows.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (const auto &sym : rows[i])
			idx[i].push_back(grid.symbol_index(sym));
	return one_hot_assignment(grid, idx);
}

// ---------------------------------------------------------------------------
// Layered evaluation

namespace {

using Row = std::vector<std::size_t>;

struct Factor {
	Formula f;
	std::size_t ready; // cells of the new row assigned before f is decided
};

// Splits f into sum-of-products pieces and records, for each piece, after
// how many cells of row `row` it can be evaluated.
std::vector<std::vector<Factor>> branch_factors(const Formula &f, const Grid &grid,
						std::size_t row)
{
	std::vector<std::vector<Factor>> out;
	for (const auto &branch : disjuncts(f)) {
		std::vector<Factor> fs;
		for (const auto &part : conjuncts(branch)) {
			std::size_t ready = 0;
			for (VarId id : free_var_ids(part)) {
				auto cell = grid.locate(id);
				if (!cell || (cell->row != row && cell->row + 1 != row))
					throw NotLayered("operand for row " + std::to_string(row) +
							 " mentions '" + variable_name(id) + "'");
				if (cell->row == row)
					ready = std::max(ready, cell->col);
			}
			fs.push_back({part, ready});
		}
		out.push_back(std::move(fs));
	}
	return out;
}

void assign_row(Assignment &v, const Grid &grid, std::size_t i, const Row &r)
{
	for (std::size_t j = 1; j <= r.size(); ++j)
		for (std::size_t s = 0; s < grid.symbols().size(); ++s)
			v.set(grid.variable(i, j, s), r[j - 1] == s);
}

// Enumerates the one-hot rows `row` under the fixed previous row in v and
// calls emit(row, value of f) for every row whose value may be nonzero.
void expand_row(const SemiringHandle &sr, const Grid &grid, std::size_t row,
		const std::vector<std::vector<Factor>> &branches, Assignment &v,
		const std::function<void(const Row &, const Element &)> &emit)
{
	const std::size_t cols = grid.cols(), nsym = grid.symbols().size();
	// by_cell[k]: (branch, factor) pairs decided once k cells are assigned.
	std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_cell(cols + 1);
	for (std::size_t b = 0; b < branches.size(); ++b)
		for (std::size_t k = 0; k < branches[b].size(); ++k)
			by_cell[branches[b][k].ready].push_back({b, k});

	std::vector<std::size_t> dead_at(branches.size(), cols + 1); // depth that killed it
	std::size_t live = branches.size();
	Row r(cols);

	auto settle = [&](std::size_t depth) {
		for (auto [b, k] : by_cell[depth]) {
			if (dead_at[b] <= cols)
				continue;
			if (eval_formula(sr, branches[b][k].f, v).is_zero()) {
				dead_at[b] = depth;
				--live;
			}
		}
	};
	auto revive = [&](std::size_t depth) {
		for (std::size_t b = 0; b < branches.size(); ++b)
			if (dead_at[b] == depth) {
				dead_at[b] = cols + 1;
				++live;
			}
	};

	std::function<void(std::size_t)> dfs = [&](std::size_t k) {
		if (k == cols) {
			Element total = sr.zero();
			for (std::size_t b = 0; b < branches.size(); ++b) {
				if (dead_at[b] <= cols)
					continue;
				Element p = sr.one();
				for (const auto &fac : branches[b])
					p = p * eval_formula(sr, fac.f, v);
				total = total + p;
			}
			if (!total.is_zero())
				emit(r, total);
			return;
		}
		for (std::size_t s = 0; s < nsym; ++s) {
			r[k] = s;
			for (std::size_t t = 0; t < nsym; ++t)
				v.set(grid.variable(row, k + 1, t), t == s);
			settle(k + 1);
			if (live > 0)
				dfs(k + 1);
			revive(k + 1);
		}
		for (std::size_t t = 0; t < nsym; ++t)
			v.unset(grid.variable(row, k + 1, t));
	};

	settle(0);
	if (live > 0)
		dfs(0);
	revive(0);
}

} // namespace

Element sat_value_layered(const SemiringHandle &sr, const ReductionArtifact &art)
{
	if (!(sr == art.semiring))
		throw MixedSemiringError("artifact is over " + art.semiring.name() + ", not " +
					 sr.name());
	const Grid &grid = art.grid;
	const std::size_t rows = grid.rows();
	std::vector<Layer> expected{{LayerRole::valid}, {LayerRole::init}};
	for (std::size_t i = 1; i < rows; ++i)
		expected.push_back({LayerRole::step, i});
	expected.push_back({LayerRole::fin});
	if (art.layers != expected)
		throw NotLayered("layers are not valid, init, step 1.." + std::to_string(rows - 1) +
				 ", fin");
	auto parts = split_conjunction(art.formula, expected.size());
	if (!parts)
		throw NotLayered("formula has fewer top-level operands than layers");
	if (!((*parts)[0] == build_phi_valid(sr, grid)))
		throw NotLayered("first operand is not the one-hot validity formula of the grid");

	auto only_row = [&](const Formula &f, std::size_t row, const char *what) {
		for (VarId id : free_var_ids(f)) {
			auto cell = grid.locate(id);
			if (!cell || cell->row != row)
				throw NotLayered(std::string(what) + " operand mentions '" +
						 variable_name(id) + "'");
		}
	};
	const Formula &init = (*parts)[1], &fin = parts->back();
	only_row(init, 0, "init");
	only_row(fin, rows - 1, "fin");

	// Row 0 is a step from nothing, weighted by the init operand.
	std::map<Row, Element> layer;
	Assignment v;
	expand_row(sr, grid, 0, branch_factors(init, grid, 0), v,
		   [&](const Row &r, const Element &val) { layer.emplace(r, val); });

	for (std::size_t i = 1; i < rows; ++i) {
		auto branches = branch_factors((*parts)[i + 1], grid, i);
		std::map<Row, Element> next;
		for (const auto &[prev, weight] : layer) {
			assign_row(v, grid, i - 1, prev);
			expand_row(sr, grid, i, branches, v, [&](const Row &r, const Element &val) {
				Element add = weight * val;
				auto it = next.find(r);
				if (it == next.end())
					next.emplace(r, add);
				else
					it->second = it->second + add;
			});
		}
		for (std::size_t j = 1; j <= grid.cols(); ++j)
			for (std::size_t s = 0; s < grid.symbols().size(); ++s)
				v.unset(grid.variable(i - 1, j, s));
		layer = std::move(next);
	}

	Element total = sr.zero();
	for (const auto &[r, weight] : layer) {
		assign_row(v, grid, rows - 1, r);
		total = total + weight * eval_formula(sr, fin, v);
	}
	return total;
}

} // namespace semikit
