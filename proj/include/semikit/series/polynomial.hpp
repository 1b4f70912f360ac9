/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/homomorphism.hpp"
#include "semikit/algebra/semiring.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace semikit {

/// Finite-support series over a semiring and an alphabet. Zero coefficients
/// are never stored; terms are kept in shortlex order of their words.
class Polynomial {
public:
	using Terms = std::map<std::string, Element, ShortLex>;

	Polynomial(SemiringHandle sr, std::vector<std::string> alphabet);

	static Polynomial monomial(SemiringHandle sr, std::vector<std::string> alphabet,
				   const Element &coeff, std::string_view word);

	const SemiringHandle &semiring() const noexcept { return sr_; }
	const std::vector<std::string> &alphabet() const noexcept { return alphabet_; }
	const Terms &terms() const noexcept { return terms_; }
	bool empty() const noexcept { return terms_.empty(); }

	/// Adds coeff to the coefficient of word.
	void accumulate(std::string_view word, const Element &coeff);

	/// Text form: one `coeff "word"` line per term, `"ε"` for the empty word.
	std::string to_string() const;
	static Polynomial parse(SemiringHandle sr, std::vector<std::string> alphabet,
				std::string_view text);

	friend bool operator==(const Polynomial &a, const Polynomial &b);

private:
	SemiringHandle sr_;
	std::vector<std::string> alphabet_;
	Terms terms_;
};

/// Stored coefficient or zero. Throws DomainError on a foreign symbol.
Element coeff(const Polynomial &p, std::string_view word);

Polynomial add_poly(const Polynomial &p, const Polynomial &q);

/// (pq, w) = sum over w = uv of (p,u)(q,v), in that order.
Polynomial cauchy_product(const Polynomial &p, const Polynomial &q);

std::vector<std::string> support(const Polynomial &p);

/// Coefficientwise image; zero images are dropped.
Polynomial apply_hom(const Homomorphism &h, const Polynomial &p);

/// A free-nat element viewed as a polynomial over nat, and back.
Polynomial to_polynomial(const Element &free_nat_element);
Element from_polynomial(const SemiringHandle &free_nat, const Polynomial &p);

} // namespace semikit
