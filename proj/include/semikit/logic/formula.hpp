/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/homomorphism.hpp"
#include "semikit/algebra/semiring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semikit {

/// Process-wide interned variable name.
using VarId = std::uint32_t;

VarId intern_variable(std::string_view name);
const std::string &variable_name(VarId id);

/// Nonempty, no whitespace, parentheses or quotes, and not a keyword.
bool is_variable_name(std::string_view name);

/// Weighted propositional formula. Negation occurs only on variables.
/// Immutable; subtrees are shared.
class Formula {
public:
	enum class Kind { var, neg_var, constant, disj, conj };

	static Formula var(std::string_view name);
	static Formula var(VarId id);
	static Formula neg_var(std::string_view name);
	static Formula neg_var(VarId id);
	static Formula constant(Element value);
	/// Throws MixedSemiringError when the operands hold constants of
	/// different semirings.
	static Formula disj(Formula left, Formula right);
	static Formula conj(Formula left, Formula right);

	Kind kind() const noexcept;
	VarId variable() const;
	const Element &value() const;
	const Formula &left() const;
	const Formula &right() const;

	/// Number of nodes in the tree, counting shared subtrees once per use.
	std::uint64_t size() const noexcept;

	/// Address of the shared node; equal for copies of one formula.
	const void *identity() const noexcept { return node_.get(); }

	/// `x`, `(not x)`, `(const <literal>)`, `(or f g)`, `(and f g)`.
	std::string to_string() const;
	static Formula parse(const SemiringHandle &sr, std::string_view text);

	friend bool operator==(const Formula &a, const Formula &b);

private:
	struct Node;
	explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	const SemiringHandle *constant_semiring() const noexcept;
	std::shared_ptr<const Node> node_;
};

/// Right fold of `or`; Const 0 for an empty list.
Formula big_or(const SemiringHandle &sr, const std::vector<Formula> &xs);

/// Right fold of `and`; Const 1 for an empty list.
Formula big_and(const SemiringHandle &sr, const std::vector<Formula> &xs);

/// Operands of the maximal right-leaning chain of `and` (resp. `or`) nodes
/// at the root; a formula of another kind is its own single operand.
std::vector<Formula> conjuncts(const Formula &f);
std::vector<Formula> disjuncts(const Formula &f);

/// Splits the right `and` chain into exactly n operands, the last of which
/// is the remaining subtree. Returns nullopt when the chain is too short.
std::optional<std::vector<Formula>> split_conjunction(const Formula &f, std::size_t n);

/// Truth assignment over interned variables.
class Assignment {
public:
	void set(VarId id, bool value);
	void set(std::string_view name, bool value) { set(intern_variable(name), value); }
	void unset(VarId id);
	std::optional<bool> get(VarId id) const noexcept
	{
		if (id >= values_.size() || values_[id] < 0)
			return std::nullopt;
		return values_[id] == 1;
	}

	friend bool operator==(const Assignment &a, const Assignment &b);

private:
	std::vector<std::int8_t> values_;
};

/// Value of f under v. Throws UnassignedVariable and MixedSemiringError.
Element eval_formula(const SemiringHandle &sr, const Formula &f, const Assignment &v);

/// Value of f if it is the same for every completion of the partial
/// assignment v, as far as zero annihilation can tell; nullopt otherwise.
std::optional<Element> eval_partial(const SemiringHandle &sr, const Formula &f,
				    const Assignment &v);

std::set<std::string> free_vars(const Formula &f);
std::set<VarId> free_var_ids(const Formula &f);

/// Largest number of variables sat_value_brute enumerates by default.
inline constexpr std::size_t default_var_cap = 20;

/// Sum of the values of f under all assignments of its variables. Throws
/// VarCapExceeded above the cap.
Element sat_value_brute(const SemiringHandle &sr, const Formula &f,
			std::size_t cap = default_var_cap);

/// Maps every constant through h.
Formula apply_hom(const Homomorphism &h, const Formula &f);

} // namespace semikit
