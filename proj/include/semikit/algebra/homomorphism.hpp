/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/semiring.hpp"
#include "semikit/algebra/term.hpp"

#include <functional>
#include <map>
#include <string>

namespace semikit {

/// One of the builtin semiring homomorphisms.
class Homomorphism {
public:
	/// 0 -> 0, n > 0 -> 1.
	static Homomorphism nat_to_bool();
	static Homomorphism nat_to_mod(std::uint64_t k);
	static Homomorphism int_to_mod(std::uint64_t k);
	static Homomorphism nat_to_int();
	/// Substitutes letters: the unique extension of a letter map to
	/// free-nat. Every alphabet symbol of source needs an image.
	static Homomorphism free_nat_to(const SemiringHandle &source, const SemiringHandle &target,
					const std::map<std::string, Element> &letters);
	/// Empty set -> 0, anything else -> 1.
	static Homomorphism finlang_to_bool(const SemiringHandle &source);

	const SemiringHandle &source() const noexcept { return source_; }
	const SemiringHandle &target() const noexcept { return target_; }
	const std::string &name() const noexcept { return name_; }

	/// Throws DomainError unless x belongs to the source.
	Element operator()(const Element &x) const;

private:
	Homomorphism(SemiringHandle source, SemiringHandle target, std::string name,
		     std::function<Element(const Element &)> map)
		: source_(std::move(source)), target_(std::move(target)), name_(std::move(name)),
		  map_(std::move(map)) {}

	SemiringHandle source_;
	SemiringHandle target_;
	std::string name_;
	std::function<Element(const Element &)> map_;
};

Element apply_hom(const Homomorphism &h, const Element &x);

/// A term read over an explicit generator list.
struct MappedTerm {
	SemiringHandle semiring; // target carrier with generators h(G)
	Term term;
};

/// Keeps the tree and replaces each generator g by h(g), so that
/// eval_term(result.semiring, result.term) = h(eval_term(source, t)).
MappedTerm apply_hom(const Homomorphism &h, const SemiringHandle &source, const Term &t);

} // namespace semikit
