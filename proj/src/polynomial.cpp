/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/series/polynomial.hpp"

#include "semikit/error.hpp"

#include <sstream>

namespace semikit {

namespace {

void check_compatible(const Polynomial &p, const Polynomial &q)
{
	if (!(p.semiring() == q.semiring()))
		throw MixedSemiringError("polynomials over " + p.semiring().name() + " and " +
					 q.semiring().name());
	if (p.alphabet() != q.alphabet())
		throw DomainError("polynomials over different alphabets");
}

} // namespace

Polynomial::Polynomial(SemiringHandle sr, std::vector<std::string> alphabet)
	: sr_(std::move(sr)), alphabet_(std::move(alphabet))
{
	check_alphabet(alphabet_);
}

Polynomial Polynomial::monomial(SemiringHandle sr, std::vector<std::string> alphabet,
				const Element &c, std::string_view word)
{
	Polynomial p(std::move(sr), std::move(alphabet));
	p.accumulate(word, c);
	return p;
}

void Polynomial::accumulate(std::string_view word, const Element &c)
{
	if (!c.belongs_to(sr_))
		throw MixedSemiringError("coefficient " + c.to_string() + " is not in " + sr_.name());
	check_word(word, alphabet_);
	auto it = terms_.find(word);
	if (it == terms_.end()) {
		if (!c.is_zero())
			terms_.emplace(std::string(word), c);
		return;
	}
	Element s = it->second + c;
	if (s.is_zero())
		terms_.erase(it);
	else
		it->second = std::move(s);
}

std::string Polynomial::to_string() const
{
	std::string out;
	for (const auto &[w, c] : terms_)
		out += c.to_string() + " " + quote_word(display_word(w)) + "\n";
	return out;
}

Polynomial Polynomial::parse(SemiringHandle sr, std::vector<std::string> alphabet,
			     std::string_view text)
{
	Polynomial p(std::move(sr), std::move(alphabet));
	std::istringstream in{std::string(text)};
	std::string line;
	while (std::getline(in, line)) {
		auto first = line.find_first_not_of(" \t\r");
		if (first == std::string::npos)
			continue;
		auto close = line.find_last_of('"');
		auto open = close == std::string::npos || close == 0
				    ? std::string::npos
				    : line.find_last_of('"', close - 1);
		if (open == std::string::npos)
			throw ParseError("polynomial line without quoted word: '" + line + "'");
		if (line.find_first_not_of(" \t\r", close + 1) != std::string::npos)
			throw ParseError("trailing text after word: '" + line + "'");
		std::string word = undisplay_word(line.substr(open + 1, close - open - 1));
		Element c = p.sr_.parse_element(line.substr(0, open));
		try {
			p.accumulate(word, c);
		} catch (const DomainError &e) {
			throw ParseError(e.what());
		}
	}
	return p;
}

bool operator==(const Polynomial &a, const Polynomial &b)
{
	return a.sr_ == b.sr_ && a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

Element coeff(const Polynomial &p, std::string_view word)
{
	check_word(word, p.alphabet());
	auto it = p.terms().find(word);
	return it == p.terms().end() ? p.semiring().zero() : it->second;
}

Polynomial add_poly(const Polynomial &p, const Polynomial &q)
{
	check_compatible(p, q);
	Polynomial r = p;
	for (const auto &[w, c] : q.terms())
		r.accumulate(w, c);
	return r;
}

Polynomial cauchy_product(const Polynomial &p, const Polynomial &q)
{
	check_compatible(p, q);
	Polynomial r(p.semiring(), p.alphabet());
	for (const auto &[u, a] : p.terms())
		for (const auto &[v, b] : q.terms())
			r.accumulate(u + v, a * b);
	return r;
}

std::vector<std::string> support(const Polynomial &p)
{
	std::vector<std::string> out;
	for (const auto &[w, c] : p.terms())
		out.push_back(w);
	return out;
}

Polynomial apply_hom(const Homomorphism &h, const Polynomial &p)
{
	if (!(p.semiring() == h.source()))
		throw DomainError("homomorphism " + h.name() + " applied to a polynomial over " +
				  p.semiring().name());
	Polynomial r(h.target(), p.alphabet());
	for (const auto &[w, c] : p.terms())
		r.accumulate(w, h(c));
	return r;
}

Polynomial to_polynomial(const Element &x)
{
	SemiringHandle sr = x.semiring();
	if (sr.kind() != SemiringKind::free_nat)
		throw DomainError("to_polynomial needs a free-nat element");
	Polynomial p(SemiringHandle::nat(), sr.alphabet());
	for (const auto &[w, n] : x.as<NatPolynomial>())
		p.accumulate(w, SemiringHandle::nat().from_integer(n));
	return p;
}

Element from_polynomial(const SemiringHandle &free_nat, const Polynomial &p)
{
	if (free_nat.kind() != SemiringKind::free_nat)
		throw DomainError("from_polynomial needs a free-nat target");
	if (!(p.semiring() == SemiringHandle::nat()))
		throw MixedSemiringError("from_polynomial needs nat coefficients");
	if (p.alphabet() != free_nat.alphabet())
		throw DomainError("alphabet mismatch");
	NatPolynomial m;
	for (const auto &[w, c] : p.terms())
		m.emplace(w, c.as<BigInt>());
	return free_nat.make(std::move(m));
}

} // namespace semikit
