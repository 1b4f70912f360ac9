/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/algebra/term.hpp"

#include "semikit/error.hpp"

#include <algorithm>
#include <cctype>

namespace semikit {

struct Term::Node {
	Kind kind;
	std::size_t index = 0;
	std::size_t size = 1;
	std::size_t gen_bound = 0;
	std::vector<Term> children{};
};

Term Term::zero()
{
	static const auto n = std::make_shared<const Node>(Node{Kind::zero});
	return Term(n);
}

Term Term::one()
{
	static const auto n = std::make_shared<const Node>(Node{Kind::one});
	return Term(n);
}

Term Term::gen(std::size_t index)
{
	Node n{Kind::gen};
	n.index = index;
	n.gen_bound = index + 1;
	return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::sum(Term left, Term right)
{
	Node n{Kind::sum};
	n.size = 1 + left.size() + right.size();
	n.gen_bound = std::max(left.generator_bound(), right.generator_bound());
	n.children = {std::move(left), std::move(right)};
	return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::prod(Term left, Term right)
{
	Node n{Kind::prod};
	n.size = 1 + left.size() + right.size();
	n.gen_bound = std::max(left.generator_bound(), right.generator_bound());
	n.children = {std::move(left), std::move(right)};
	return Term(std::make_shared<const Node>(std::move(n)));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

std::size_t Term::generator() const
{
	if (node_->kind != Kind::gen)
		throw DomainError("term is not a generator leaf");
	return node_->index;
}

const Term &Term::left() const
{
	if (node_->children.empty())
		throw DomainError("term has no children");
	return node_->children[0];
}

const Term &Term::right() const
{
	if (node_->children.empty())
		throw DomainError("term has no children");
	return node_->children[1];
}

std::size_t Term::size() const noexcept { return node_->size; }

std::size_t Term::generator_bound() const noexcept { return node_->gen_bound; }

namespace {

void print(const Term &t, std::string &out)
{
	switch (t.kind()) {
	case Term::Kind::zero:
		out += "0";
		return;
	case Term::Kind::one:
		out += "1";
		return;
	case Term::Kind::gen:
		out += "g" + std::to_string(t.generator());
		return;
	case Term::Kind::sum:
	case Term::Kind::prod:
		out += "(";
		print(t.left(), out);
		out += t.kind() == Term::Kind::sum ? " + " : " * ";
		print(t.right(), out);
		out += ")";
		return;
	}
}

struct TermParser {
	std::string_view s;
	std::size_t pos = 0;

	void skip()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			++pos;
	}

	[[noreturn]] void fail(const std::string &msg)
	{
		throw ParseError("term: " + msg + " at offset " + std::to_string(pos));
	}

	Term parse()
	{
		skip();
		if (pos >= s.size())
			fail("unexpected end");
		char ch = s[pos];
		if (ch == '0') {
			++pos;
			return Term::zero();
		}
		if (ch == '1') {
			++pos;
			return Term::one();
		}
		if (ch == 'g') {
			++pos;
			std::size_t start = pos;
			while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
				++pos;
			if (pos == start || pos - start > 9)
				fail("bad generator index");
			return Term::gen(std::stoul(std::string(s.substr(start, pos - start))));
		}
		if (ch == '(') {
			++pos;
			Term l = parse();
			skip();
			if (pos >= s.size() || (s[pos] != '+' && s[pos] != '*'))
				fail("expected '+' or '*'");
			char op = s[pos++];
			Term r = parse();
			skip();
			if (pos >= s.size() || s[pos] != ')')
				fail("expected ')'");
			++pos;
			return op == '+' ? Term::sum(std::move(l), std::move(r))
					 : Term::prod(std::move(l), std::move(r));
		}
		fail(std::string("unexpected character '") + ch + "'");
	}
};

void check_generators(const SemiringHandle &sr, const Term &t)
{
	if (t.generator_bound() > sr.generators().size())
		throw DomainError("term uses generator g" + std::to_string(t.generator_bound() - 1) +
				  " but " + sr.name() + " has " +
				  std::to_string(sr.generators().size()) + " generators");
}

Element eval_rec(const SemiringHandle &sr, const Term &t)
{
	switch (t.kind()) {
	case Term::Kind::zero:
		return sr.zero();
	case Term::Kind::one:
		return sr.one();
	case Term::Kind::gen:
		return sr.generators()[t.generator()];
	case Term::Kind::sum:
		return eval_rec(sr, t.left()) + eval_rec(sr, t.right());
	case Term::Kind::prod:
		return eval_rec(sr, t.left()) * eval_rec(sr, t.right());
	}
	throw DomainError("bad term");
}

// Continuation-passing walk: the left factor of a product is resolved first,
// then the right factor continues from the partial product.
void choices(const SemiringHandle &sr, const Term &t, const Element &prefix,
	     const std::function<void(const Element &)> &k)
{
	switch (t.kind()) {
	case Term::Kind::zero:
		k(prefix * sr.zero());
		return;
	case Term::Kind::one:
		k(prefix * sr.one());
		return;
	case Term::Kind::gen:
		k(prefix * sr.generators()[t.generator()]);
		return;
	case Term::Kind::sum:
		choices(sr, t.left(), prefix, k);
		choices(sr, t.right(), prefix, k);
		return;
	case Term::Kind::prod:
		choices(sr, t.left(), prefix, [&](const Element &mid) { choices(sr, t.right(), mid, k); });
		return;
	}
}

Term word_term(const std::vector<std::string> &symbols,
	       const std::function<std::size_t(const std::string &)> &index_of)
{
	std::vector<Term> factors;
	for (const auto &s : symbols)
		factors.push_back(Term::gen(index_of(s)));
	return product_terms(factors);
}

} // namespace

std::string Term::to_string() const
{
	std::string out;
	print(*this, out);
	return out;
}

Term Term::parse(std::string_view text)
{
	TermParser p{text};
	Term t = p.parse();
	p.skip();
	if (p.pos != text.size())
		p.fail("trailing input");
	return t;
}

bool operator==(const Term &a, const Term &b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.kind() != b.kind() || a.size() != b.size())
		return false;
	switch (a.kind()) {
	case Term::Kind::zero:
	case Term::Kind::one:
		return true;
	case Term::Kind::gen:
		return a.generator() == b.generator();
	default:
		return a.left() == b.left() && a.right() == b.right();
	}
}

Element eval_term(const SemiringHandle &sr, const Term &t)
{
	check_generators(sr, t);
	return eval_rec(sr, t);
}

void for_each_choice(const SemiringHandle &sr, const Term &t,
		     const std::function<void(const Element &)> &visit)
{
	check_generators(sr, t);
	choices(sr, t, sr.one(), visit);
}

Element nondet_eval_term(const SemiringHandle &sr, const Term &t)
{
	Element total = sr.zero();
	for_each_choice(sr, t, [&](const Element &v) { total = total + v; });
	return total;
}

Term sum_terms(const std::vector<Term> &terms)
{
	if (terms.empty())
		return Term::zero();
	Term acc = terms.back();
	for (std::size_t i = terms.size() - 1; i-- > 0;)
		acc = Term::sum(terms[i], std::move(acc));
	return acc;
}

Term product_terms(const std::vector<Term> &terms)
{
	if (terms.empty())
		return Term::one();
	Term acc = terms.back();
	for (std::size_t i = terms.size() - 1; i-- > 0;)
		acc = Term::prod(terms[i], std::move(acc));
	return acc;
}

Term nat_to_term(const BigInt &n)
{
	if (n < 0)
		throw DomainError("nat_to_term needs a natural number");
	Term two = Term::sum(Term::one(), Term::one());
	std::vector<Term> parts;
	std::size_t bits = n == 0 ? 0 : msb(n) + 1;
	for (std::size_t k = 0; k < bits; ++k) {
		if (!bit_test(n, static_cast<unsigned>(k)))
			continue;
		if (k == 0) {
			parts.push_back(Term::one());
			continue;
		}
		parts.push_back(product_terms(std::vector<Term>(k, two)));
	}
	return sum_terms(parts);
}

Term encode_tau(const SemiringHandle &sr, const Element &a)
{
	if (!a.belongs_to(sr))
		throw MixedSemiringError("element " + a.to_string() + " is not in " + sr.name());
	if (!sr.finitely_generated())
		throw NotFinitelyGenerated(sr.name() + " has no finite generating set");
	if (sr.has_custom_generators())
		throw NotFinitelyGenerated("encode_tau works over the canonical generators only");
	if (a.is_zero())
		return Term::zero();
	switch (sr.kind()) {
	case SemiringKind::boolean:
		return Term::one();
	case SemiringKind::nat:
		return nat_to_term(a.as<BigInt>());
	case SemiringKind::integer: {
		const BigInt &v = a.as<BigInt>();
		if (v >= 0)
			return nat_to_term(v);
		return Term::prod(Term::gen(0), nat_to_term(-v));
	}
	case SemiringKind::mod:
		return nat_to_term(BigInt(a.as<std::uint64_t>()));
	case SemiringKind::finlang: {
		const auto &alphabet = sr.alphabet();
		auto index_of = [&](const std::string &s) {
			return static_cast<std::size_t>(
				std::find(alphabet.begin(), alphabet.end(), s) - alphabet.begin());
		};
		std::vector<Term> words;
		for (const auto &w : a.as<WordSet>())
			words.push_back(word_term(split_symbols(w), index_of));
		return sum_terms(words);
	}
	case SemiringKind::free_nat: {
		const auto &alphabet = sr.alphabet();
		auto index_of = [&](const std::string &s) {
			return static_cast<std::size_t>(
				std::find(alphabet.begin(), alphabet.end(), s) - alphabet.begin());
		};
		std::vector<Term> monomials;
		for (const auto &[w, n] : a.as<NatPolynomial>()) {
			Term word = word_term(split_symbols(w), index_of);
			monomials.push_back(n == 1 ? word : Term::prod(nat_to_term(n), word));
		}
		return sum_terms(monomials);
	}
	case SemiringKind::smax: {
		std::vector<Term> bits;
		for (char ch : *a.as<RadixWord>())
			bits.push_back(Term::gen(ch == '0' ? 0 : 1));
		return product_terms(bits);
	}
	default:
		break;
	}
	throw NotFinitelyGenerated(sr.name() + " has no finite generating set");
}

} // namespace semikit
