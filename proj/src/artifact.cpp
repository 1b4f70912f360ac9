/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/logic/artifact.hpp"

#include "semikit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace semikit {

std::string grid_variable_name(std::size_t i, std::size_t j, std::string_view symbol)
{
	return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::string(symbol);
}

Grid::Grid(std::size_t rows, std::size_t cols, std::vector<std::string> symbols)
	: rows_(rows), cols_(cols), symbols_(std::move(symbols))
{
	if (rows_ == 0 || cols_ == 0)
		throw ValidationError("grid needs at least one row and one column");
	if (symbols_.empty())
		throw ValidationError("grid needs at least one symbol");
	for (std::size_t a = 0; a < symbols_.size(); ++a)
		for (std::size_t b = a + 1; b < symbols_.size(); ++b)
			if (symbols_[a] == symbols_[b])
				throw ValidationError("duplicate grid symbol '" + symbols_[a] + "'");
	ids_.reserve(rows_ * cols_ * symbols_.size());
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 1; j <= cols_; ++j)
			for (std::size_t s = 0; s < symbols_.size(); ++s) {
				VarId id = intern_variable(grid_variable_name(i, j, symbols_[s]));
				ids_.push_back(id);
				where_.emplace(id, Cell{i, j, s});
			}
}

std::size_t Grid::symbol_index(std::string_view symbol) const
{
	auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
	if (it == symbols_.end())
		throw DomainError("symbol '" + std::string(symbol) + "' is not in the grid");
	return static_cast<std::size_t>(it - symbols_.begin());
}

VarId Grid::variable(std::size_t i, std::size_t j, std::size_t symbol) const
{
	if (i >= rows_ || j == 0 || j > cols_ || symbol >= symbols_.size())
		throw DomainError("grid cell (" + std::to_string(i) + ", " + std::to_string(j) +
				  ") or symbol index out of range");
	return ids_[(i * cols_ + (j - 1)) * symbols_.size() + symbol];
}

std::optional<Grid::Cell> Grid::locate(VarId id) const
{
	auto it = where_.find(id);
	if (it == where_.end())
		return std::nullopt;
	return it->second;
}

Formula build_phi_valid(const SemiringHandle &sr, const Grid &grid)
{
	const std::size_t n = grid.symbols().size();
	std::vector<Formula> cells;
	for (std::size_t i = 0; i < grid.rows(); ++i)
		for (std::size_t j = 1; j <= grid.cols(); ++j) {
			std::vector<Formula> choices;
			for (std::size_t c = 0; c < n; ++c) {
				std::vector<Formula> lits{Formula::var(grid.variable(i, j, c))};
				for (std::size_t d = 0; d < n; ++d)
					if (d != c)
						lits.push_back(Formula::neg_var(grid.variable(i, j, d)));
				choices.push_back(big_and(sr, lits));
			}
			cells.push_back(big_or(sr, choices));
		}
	return big_and(sr, cells);
}

Assignment one_hot_assignment(const Grid &grid,
			      const std::vector<std::vector<std::size_t>> &rows)
{
	if (rows.size() != grid.rows())
		throw DomainError("assignment has the wrong number of rows");
	Assignment v;
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != grid.cols())
			throw DomainError("assignment row has the wrong number of cells");
		for (std::size_t j = 1; j <= grid.cols(); ++j)
			for (std::size_t s = 0; s < grid.symbols().size(); ++s)
				v.set(grid.variable(i, j, s), rows[i][j - 1] == s);
	}
	return v;
}

std::optional<std::vector<std::vector<std::string>>> decode_rows(const Grid &grid,
								 const Assignment &v)
{
	std::vector<std::vector<std::string>> out(grid.rows());
	for (std::size_t i = 0; i < grid.rows(); ++i)
		for (std::size_t j = 1; j <= grid.cols(); ++j) {
			std::optional<std::size_t> hit;
			for (std::size_t s = 0; s < grid.symbols().size(); ++s) {
				if (!v.get(grid.variable(i, j, s)).value_or(false))
					continue;
				if (hit)
					return std::nullopt;
				hit = s;
			}
			if (!hit)
				return std::nullopt;
			out[i].push_back(grid.symbols()[*hit]);
		}
	return out;
}

std::vector<Formula> ReductionArtifact::factors() const
{
	if (layers.empty())
		throw GridMismatch("artifact has no layers");
	auto parts = split_conjunction(formula, layers.size());
	if (!parts)
		throw GridMismatch("formula has fewer top-level operands than the " +
				   std::to_string(layers.size()) + " listed layers");
	return *parts;
}

// ---------------------------------------------------------------------------
// Metadata

namespace {

using json = nlohmann::ordered_json;

const char *role_name(LayerRole r)
{
	switch (r) {
	case LayerRole::valid: return "valid";
	case LayerRole::init: return "init";
	case LayerRole::step: return "step";
	case LayerRole::fin: return "fin";
	case LayerRole::other: return "other";
	}
	return "other";
}

LayerRole parse_role(const std::string &s)
{
	if (s == "valid")
		return LayerRole::valid;
	if (s == "init")
		return LayerRole::init;
	if (s == "step")
		return LayerRole::step;
	if (s == "fin")
		return LayerRole::fin;
	if (s == "other")
		return LayerRole::other;
	throw ParseError("unknown layer role '" + s + "'");
}

json metadata_json(const ReductionArtifact &art)
{
	json j;
	j["semiring"] = art.semiring.name();
	j["rows"] = art.grid.rows();
	j["cols"] = art.grid.cols();
	j["symbols"] = art.grid.symbols();
	j["variables"] = "x_<row>_<col>_<symbol>";
	json layers = json::array();
	for (const auto &l : art.layers) {
		json e;
		e["role"] = role_name(l.role);
		if (l.role == LayerRole::step)
			e["row"] = l.row;
		layers.push_back(e);
	}
	j["layers"] = layers;
	j["word"] = art.word;
	return j;
}

} // namespace

std::string artifact_metadata(const ReductionArtifact &art)
{
	return metadata_json(art).dump(2) + "\n";
}

ReductionArtifact read_artifact(std::string_view formula_text, std::string_view metadata)
{
	json j;
	try {
		j = json::parse(metadata);
		auto sr = SemiringHandle::parse(j.at("semiring").get<std::string>());
		Grid grid(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
			  j.at("symbols").get<std::vector<std::string>>());
		std::vector<Layer> layers;
		for (const auto &e : j.at("layers")) {
			Layer l{parse_role(e.at("role").get<std::string>())};
			if (l.role == LayerRole::step)
				l.row = e.at("row").get<std::size_t>();
			layers.push_back(l);
		}
		std::string word = j.value("word", std::string());
		Formula f = Formula::parse(sr, formula_text);
		return ReductionArtifact{sr, f, grid, std::move(layers), std::move(word)};
	} catch (const json::exception &e) {
		throw ParseError(std::string("artifact metadata: ") + e.what());
	}
}

std::string encode_artifact(const ReductionArtifact &art)
{
	return metadata_json(art).dump() + "\n" + art.formula.to_string() + "\n";
}

ReductionArtifact decode_artifact(std::string_view text)
{
	auto nl = text.find('\n');
	if (nl == std::string_view::npos)
		throw ParseError("artifact lacks a metadata line");
	return read_artifact(text.substr(nl + 1), text.substr(0, nl));
}

void check_grid_variables(const ReductionArtifact &art)
{
	for (VarId id : free_var_ids(art.formula))
		if (!art.grid.locate(id))
			throw GridMismatch("variable '" + variable_name(id) + "' is not a grid variable");
}

// ---------------------------------------------------------------------------
// One-hot evaluation

Element sat_value_onehot(const SemiringHandle &sr, const ReductionArtifact &art)
{
	if (!(sr == art.semiring))
		throw MixedSemiringError("artifact is over " + art.semiring.name() + ", not " +
					 sr.name());
	auto factors = art.factors();
	if (!(factors[0] == build_phi_valid(sr, art.grid)))
		throw GridMismatch("first operand is not the one-hot validity formula of the grid");
	check_grid_variables(art);

	const Grid &grid = art.grid;
	const std::size_t cells = grid.rows() * grid.cols();
	const std::size_t nsym = grid.symbols().size();

	// A factor is checked at every cell of the last row it mentions; a
	// factor without variables is checked once up front.
	std::vector<std::vector<std::size_t>> by_row(grid.rows());
	for (std::size_t f = 1; f < factors.size(); ++f) {
		auto ids = free_var_ids(factors[f]);
		if (ids.empty()) {
			if (eval_formula(sr, factors[f], Assignment{}).is_zero())
				return sr.zero();
			continue;
		}
		std::size_t last = 0;
		for (VarId id : ids)
			last = std::max(last, grid.locate(id)->row);
		by_row[last].push_back(f);
	}

	Element total = sr.zero();
	Assignment v;
	std::function<void(std::size_t)> dfs = [&](std::size_t k) {
		if (k == cells) {
			total = total + eval_formula(sr, art.formula, v);
			return;
		}
		const std::size_t i = k / grid.cols(), j = k % grid.cols() + 1;
		for (std::size_t s = 0; s < nsym; ++s) {
			for (std::size_t t = 0; t < nsym; ++t)
				v.set(grid.variable(i, j, t), t == s);
			bool dead = false;
			for (std::size_t f : by_row[i]) {
				auto val = eval_partial(sr, factors[f], v);
				if (val && val->is_zero()) {
					dead = true;
					break;
				}
			}
			if (!dead)
				dfs(k + 1);
		}
		for (std::size_t t = 0; t < nsym; ++t)
			v.unset(grid.variable(i, j, t));
	};
	dfs(0);
	return total;
}

} // namespace semikit
