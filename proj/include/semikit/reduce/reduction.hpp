/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/caps.hpp"
#include "semikit/logic/artifact.hpp"
#include "semikit/machine/machine.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace semikit {

/// Machine accepted by the SAT reduction: semi-infinite tape, exactly one
/// accepting state and a declared bound f. The bound is checked against the
/// actual runs on each word during reduction.
class NormalFormMachine {
public:
	/// Throws ValidationError when m is not in normal form.
	explicit NormalFormMachine(Machine m);

	const Machine &machine() const noexcept { return m_; }
	const SemiringHandle &semiring() const noexcept { return m_.semiring(); }
	const std::string &accepting_state() const { return m_.accepting().front(); }
	const TimeBound &bound() const { return *m_.bound(); }

	/// Grid symbols: the work alphabet followed by the states.
	std::vector<std::string> grid_symbols() const;

private:
	Machine m_;
};

/// Weight-one stalls (p, c, p, c, 0) for every state p and work symbol c
/// without a transition, in state-major order. Accepting states stall on
/// every symbol.
std::vector<Transition> pseudo_transitions(const NormalFormMachine &m);

/// Grid for f steps: f + 1 rows, f columns.
Grid reduction_grid(const NormalFormMachine &m, std::size_t f);

/// Pins row 0 to the end marker, q0, w and blanks. Throws BoundTooSmall
/// when the row is shorter than |w| + 2.
Formula build_phi_init(const NormalFormMachine &m, std::string_view w, const Grid &grid);

/// Sum over the transitions and stalls e of Const(σ(e)) times the
/// column-wise check that row i follows from row i-1 by e.
///
/// A cell holding a state in the last column has the head on the padding
/// blank. Its rewrite is allowed when the step writes a blank and does not
/// move right, because the configuration then keeps its length; every other
/// step from there would overflow the row.
Formula build_phi_step(const NormalFormMachine &m, std::size_t i, const Grid &grid);

/// Some cell of the last row holds the accepting state.
Formula build_phi_fin(const NormalFormMachine &m, const Grid &grid);

/// valid ∧ init ∧ step_1 ∧ ... ∧ step_{rows-1} ∧ fin over the given grid,
/// with its layer list. No bound checks; used for truncated grids too.
ReductionArtifact assemble_reduction(const NormalFormMachine &m, std::string_view w,
				     const Grid &grid);

/// Formula for w with f = f(|w|). Throws BoundTooSmall when f < |w| + 2,
/// GridCapExceeded when f is above caps.grid and BoundViolation when a run
/// on w is longer than f or reaches a configuration longer than f.
ReductionArtifact cook_levin_reduce(const NormalFormMachine &m, std::string_view w,
				    const Caps &caps = Caps{});

/// Node budget the reduction stays within:
/// reduction_size_constant * f^2 * (|Δ| + |S|) * |S|^2 with S = Γ ∪ Q.
inline constexpr std::uint64_t reduction_size_constant = 64;
std::uint64_t reduction_size_bound(const NormalFormMachine &m, std::size_t f);

/// Rows of the grid for a computation: each configuration padded with
/// blanks, the last one repeated until there are grid.rows() rows. Throws
/// ComputationTooLong when the computation or a configuration does not fit.
std::vector<std::vector<std::string>> computation_rows(const NormalFormMachine &m,
						       const Computation &g, const Grid &grid);

/// One-hot assignment of computation_rows.
Assignment assignment_of_computation(const NormalFormMachine &m, const Computation &g,
				     const Grid &grid);

/// Row-by-row dynamic program over one-hot rows: D(row 0) from the init
/// layer, D(r) = Σ D(r') · step_i(r', r), result Σ D(r) · fin(r). Products
/// keep row order. Throws NotLayered unless the layers are valid, init,
/// step 1 .. rows-1, fin and every step only mentions its two rows.
Element sat_value_layered(const SemiringHandle &sr, const ReductionArtifact &art);

} // namespace semikit
