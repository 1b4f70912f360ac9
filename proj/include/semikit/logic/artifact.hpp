/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/logic/formula.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semikit {

/// Name of the variable saying that cell (i, j) holds symbol: x_<i>_<j>_<symbol>.
std::string grid_variable_name(std::size_t i, std::size_t j, std::string_view symbol);

/// Tableau of one-hot variables x_{i,j,c}: rows are numbered from 0,
/// columns from 1.
class Grid {
public:
	struct Cell {
		std::size_t row;
		std::size_t col;
		std::size_t symbol;
	};

	Grid(std::size_t rows, std::size_t cols, std::vector<std::string> symbols);

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }
	const std::vector<std::string> &symbols() const noexcept { return symbols_; }
	std::size_t variable_count() const noexcept { return ids_.size(); }

	/// Throws DomainError for a symbol outside the grid.
	std::size_t symbol_index(std::string_view symbol) const;

	VarId variable(std::size_t i, std::size_t j, std::size_t symbol) const;
	VarId variable(std::size_t i, std::size_t j, std::string_view symbol) const
	{
		return variable(i, j, symbol_index(symbol));
	}

	std::optional<Cell> locate(VarId id) const;

	friend bool operator==(const Grid &a, const Grid &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.symbols_ == b.symbols_;
	}

private:
	std::size_t rows_, cols_;
	std::vector<std::string> symbols_;
	std::vector<VarId> ids_;
	std::unordered_map<VarId, Cell> where_;
};

/// For every cell, exactly one symbol variable is true.
Formula build_phi_valid(const SemiringHandle &sr, const Grid &grid);

/// One-hot assignment of all grid variables; rows[i][j-1] is a symbol index.
Assignment one_hot_assignment(const Grid &grid,
			      const std::vector<std::vector<std::size_t>> &rows);

/// Symbol rows of a one-hot assignment; nullopt if some cell is not one-hot.
std::optional<std::vector<std::vector<std::string>>> decode_rows(const Grid &grid,
								 const Assignment &v);

enum class LayerRole { valid, init, step, fin, other };

/// One operand of the top-level conjunction chain. Step layers record the
/// row they produce.
struct Layer {
	LayerRole role;
	std::size_t row = 0;

	friend bool operator==(const Layer &, const Layer &) = default;
};

struct ReductionArtifact {
	SemiringHandle semiring;
	Formula formula;
	Grid grid;
	std::vector<Layer> layers;
	std::string word; // informational

	/// The top-level operands, one per layer. Throws GridMismatch when the
	/// conjunction chain does not have that many operands.
	std::vector<Formula> factors() const;
};

/// Structured-text side file: semiring, grid dimensions, symbol order,
/// variable naming and the layer list.
std::string artifact_metadata(const ReductionArtifact &art);

/// Rebuilds an artifact from its formula text and metadata.
ReductionArtifact read_artifact(std::string_view formula_text, std::string_view metadata);

/// Metadata on the first line, formula text after it.
std::string encode_artifact(const ReductionArtifact &art);
ReductionArtifact decode_artifact(std::string_view text);

/// Throws GridMismatch if the formula mentions a variable outside the grid.
void check_grid_variables(const ReductionArtifact &art);

/// Sum of the formula over one-hot assignments only, which equals the full
/// SAT value because the leading φ_valid operand annihilates every other
/// assignment. Throws GridMismatch when the first layer is not that
/// operand or a variable lies outside the grid.
Element sat_value_onehot(const SemiringHandle &sr, const ReductionArtifact &art);

} // namespace semikit
