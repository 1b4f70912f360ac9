/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/semiring.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace semikit {

/// Binary tree over generator indices, 0, 1, + and *. Immutable; subtrees
/// are shared.
class Term {
public:
	enum class Kind { zero, one, gen, sum, prod };

	static Term zero();
	static Term one();
	static Term gen(std::size_t index);
	static Term sum(Term left, Term right);
	static Term prod(Term left, Term right);

	Kind kind() const noexcept;
	std::size_t generator() const;
	const Term &left() const;
	const Term &right() const;

	/// Number of nodes.
	std::size_t size() const noexcept;

	/// Largest generator index plus one, 0 when no generator occurs.
	std::size_t generator_bound() const noexcept;

	/// `0`, `1`, `g<i>`, `(t + t)`, `(t * t)`.
	std::string to_string() const;
	static Term parse(std::string_view text);

	friend bool operator==(const Term &a, const Term &b);

private:
	struct Node;
	explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	std::shared_ptr<const Node> node_;
};

/// Value of t with Gen(i) read as sr.generators()[i].
Element eval_term(const SemiringHandle &sr, const Term &t);

/// Sums the ordered leaf products of every way of choosing one side at each
/// sum node; agrees with eval_term by distributivity.
Element nondet_eval_term(const SemiringHandle &sr, const Term &t);

/// Calls visit once per choice with that choice's ordered product.
void for_each_choice(const SemiringHandle &sr, const Term &t,
		     const std::function<void(const Element &)> &visit);

/// Binary expansion of n: a right-folded sum, over the set bits k in
/// increasing order, of right-folded products of k copies of (1 + 1).
Term nat_to_term(const BigInt &n);

/// Deterministic sum-of-products term over the canonical generators of sr
/// that evaluates to a. Throws NotFinitelyGenerated for fuzzy and
/// max/min-plus carriers.
Term encode_tau(const SemiringHandle &sr, const Element &a);

/// Right fold of + over the terms; Zero for an empty list.
Term sum_terms(const std::vector<Term> &terms);

/// Right fold of * over the terms; One for an empty list.
Term product_terms(const std::vector<Term> &terms);

} // namespace semikit
