/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/algebra/semiring.hpp"

#include "semikit/error.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace semikit {

namespace detail {

struct Carrier {
	SemiringKind kind;
	std::string name;
	std::uint64_t k = 0;
	TNorm tnorm = TNorm::min;
	std::vector<std::string> alphabet;
	bool finitely_generated = false;
	std::vector<Element> generators;
	std::optional<Element> zero;
	std::optional<Element> one;

	Element raw(Payload p) const { return Element(this, std::move(p)); }
};

} // namespace detail

namespace {

using detail::Carrier;

const char *tnorm_name(TNorm t)
{
	switch (t) {
	case TNorm::min:
		return "min";
	case TNorm::product:
		return "product";
	case TNorm::lukasiewicz:
		return "lukasiewicz";
	}
	return "?";
}

std::string join_alphabet(const std::vector<std::string> &alphabet)
{
	std::string out;
	for (std::size_t i = 0; i < alphabet.size(); ++i) {
		if (i)
			out += ",";
		out += alphabet[i];
	}
	return out;
}

void init_constants(Carrier &c)
{
	switch (c.kind) {
	case SemiringKind::boolean:
		c.zero = c.raw(false);
		c.one = c.raw(true);
		break;
	case SemiringKind::nat:
		c.zero = c.raw(BigInt(0));
		c.one = c.raw(BigInt(1));
		c.finitely_generated = true;
		break;
	case SemiringKind::integer:
		c.zero = c.raw(BigInt(0));
		c.one = c.raw(BigInt(1));
		c.generators.push_back(c.raw(BigInt(-1)));
		c.finitely_generated = true;
		break;
	case SemiringKind::mod:
		c.zero = c.raw(std::uint64_t{0});
		c.one = c.raw(std::uint64_t{1});
		c.finitely_generated = true;
		break;
	case SemiringKind::fuzzy:
		c.zero = c.raw(Rational(0));
		c.one = c.raw(Rational(1));
		break;
	case SemiringKind::maxplus_nat:
	case SemiringKind::minplus_nat:
		c.zero = c.raw(ExtendedNat{true, 0});
		c.one = c.raw(ExtendedNat{false, 0});
		break;
	case SemiringKind::finlang:
		c.zero = c.raw(WordSet{});
		c.one = c.raw(WordSet{""});
		for (const auto &s : c.alphabet)
			c.generators.push_back(c.raw(WordSet{s}));
		c.finitely_generated = true;
		break;
	case SemiringKind::smax:
		c.zero = c.raw(RadixWord{});
		c.one = c.raw(RadixWord{""});
		c.generators.push_back(c.raw(RadixWord{"0"}));
		c.generators.push_back(c.raw(RadixWord{"1"}));
		c.finitely_generated = true;
		break;
	case SemiringKind::free_nat:
		c.zero = c.raw(NatPolynomial{});
		c.one = c.raw(NatPolynomial{{"", BigInt(1)}});
		for (const auto &s : c.alphabet)
			c.generators.push_back(c.raw(NatPolynomial{{s, BigInt(1)}}));
		c.finitely_generated = true;
		break;
	}
	if (c.kind == SemiringKind::boolean)
		c.finitely_generated = true;
}

// Carriers live for the lifetime of the process, so elements can refer to
// them by plain pointer.
const Carrier *intern(Carrier proto)
{
	static std::mutex mu;
	static std::map<std::string, std::unique_ptr<Carrier>> registry;
	std::lock_guard<std::mutex> lock(mu);
	auto it = registry.find(proto.name);
	if (it != registry.end())
		return it->second.get();
	auto owned = std::make_unique<Carrier>(std::move(proto));
	init_constants(*owned);
	const Carrier *ptr = owned.get();
	registry.emplace(ptr->name, std::move(owned));
	return ptr;
}

Carrier proto(SemiringKind kind, std::string name)
{
	Carrier c;
	c.kind = kind;
	c.name = std::move(name);
	return c;
}

std::string trim(std::string_view s)
{
	std::size_t b = 0, e = s.size();
	while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
		++b;
	while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
		--e;
	return std::string(s.substr(b, e - b));
}

bool is_decimal(std::string_view s)
{
	if (s.empty())
		return false;
	return std::all_of(s.begin(), s.end(),
			   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

BigInt parse_natural(std::string_view s, std::string_view literal)
{
	if (!is_decimal(s))
		throw ParseError("expected a natural number in '" + std::string(literal) + "'");
	return BigInt(std::string(s));
}

BigInt parse_integer(std::string_view s, std::string_view literal)
{
	if (!s.empty() && s[0] == '-')
		return -parse_natural(s.substr(1), literal);
	if (!s.empty() && s[0] == '+')
		return parse_natural(s.substr(1), literal);
	return parse_natural(s, literal);
}

// Reads a double-quoted word starting at pos; words hold no quotes.
std::string read_quoted(std::string_view s, std::size_t &pos, std::string_view literal)
{
	if (pos >= s.size() || s[pos] != '"')
		throw ParseError("expected a quoted word in '" + std::string(literal) + "'");
	std::size_t end = s.find('"', pos + 1);
	if (end == std::string_view::npos)
		throw ParseError("unterminated word in '" + std::string(literal) + "'");
	std::string w(s.substr(pos + 1, end - pos - 1));
	pos = end + 1;
	return undisplay_word(w);
}

void skip_space(std::string_view s, std::size_t &pos)
{
	while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
		++pos;
}

std::string rational_literal(const Rational &q)
{
	BigInt num = boost::multiprecision::numerator(q);
	BigInt den = boost::multiprecision::denominator(q);
	if (den == 1)
		return num.str();
	return num.str() + "/" + den.str();
}

bool is_binary(std::string_view w)
{
	return std::all_of(w.begin(), w.end(), [](char ch) { return ch == '0' || ch == '1'; });
}

} // namespace

// ---------------------------------------------------------------------------
// Handles

SemiringHandle SemiringHandle::boolean()
{
	return SemiringHandle(intern(proto(SemiringKind::boolean, "bool")));
}

SemiringHandle SemiringHandle::nat()
{
	return SemiringHandle(intern(proto(SemiringKind::nat, "nat")));
}

SemiringHandle SemiringHandle::integer()
{
	return SemiringHandle(intern(proto(SemiringKind::integer, "int")));
}

SemiringHandle SemiringHandle::modulo(std::uint64_t k)
{
	if (k < 2)
		throw ValidationError("mod(k) needs k >= 2");
	if (k > (std::uint64_t{1} << 62))
		throw ValidationError("modulus too large");
	Carrier c = proto(SemiringKind::mod, "mod(" + std::to_string(k) + ")");
	c.k = k;
	return SemiringHandle(intern(std::move(c)));
}

SemiringHandle SemiringHandle::fuzzy(TNorm tnorm)
{
	Carrier c = proto(SemiringKind::fuzzy, std::string("fuzzy(") + tnorm_name(tnorm) + ")");
	c.tnorm = tnorm;
	return SemiringHandle(intern(std::move(c)));
}

SemiringHandle SemiringHandle::maxplus_nat()
{
	return SemiringHandle(intern(proto(SemiringKind::maxplus_nat, "maxplus-nat")));
}

SemiringHandle SemiringHandle::minplus_nat()
{
	return SemiringHandle(intern(proto(SemiringKind::minplus_nat, "minplus-nat")));
}

SemiringHandle SemiringHandle::finlang(const std::vector<std::string> &alphabet)
{
	check_alphabet(alphabet);
	Carrier c = proto(SemiringKind::finlang, "finlang(" + join_alphabet(alphabet) + ")");
	c.alphabet = alphabet;
	return SemiringHandle(intern(std::move(c)));
}

SemiringHandle SemiringHandle::smax()
{
	return SemiringHandle(intern(proto(SemiringKind::smax, "smax")));
}

SemiringHandle SemiringHandle::free_nat(const std::vector<std::string> &alphabet)
{
	check_alphabet(alphabet);
	Carrier c = proto(SemiringKind::free_nat, "free-nat(" + join_alphabet(alphabet) + ")");
	c.alphabet = alphabet;
	return SemiringHandle(intern(std::move(c)));
}

SemiringHandle SemiringHandle::parse(std::string_view text)
{
	std::string desc = trim(text);
	auto args_of = [&](std::string_view head) -> std::optional<std::string> {
		if (desc.size() < head.size() + 2 || desc.compare(0, head.size(), head) != 0 ||
		    desc[head.size()] != '(' || desc.back() != ')')
			return std::nullopt;
		return desc.substr(head.size() + 1, desc.size() - head.size() - 2);
	};
	auto split_args = [](const std::string &args) {
		std::vector<std::string> out;
		std::string cur;
		for (char ch : args) {
			if (ch == ',') {
				out.push_back(trim(cur));
				cur.clear();
			} else {
				cur += ch;
			}
		}
		out.push_back(trim(cur));
		return out;
	};

	if (desc == "bool")
		return boolean();
	if (desc == "nat")
		return nat();
	if (desc == "int")
		return integer();
	if (desc == "maxplus-nat")
		return maxplus_nat();
	if (desc == "minplus-nat")
		return minplus_nat();
	if (desc == "smax")
		return smax();
	if (auto a = args_of("mod")) {
		std::string t = trim(*a);
		if (!is_decimal(t) || t.size() > 19)
			throw ParseError("bad modulus in '" + desc + "'");
		return modulo(std::stoull(t));
	}
	if (auto a = args_of("fuzzy")) {
		std::string t = trim(*a);
		if (t == "min")
			return fuzzy(TNorm::min);
		if (t == "product")
			return fuzzy(TNorm::product);
		if (t == "lukasiewicz")
			return fuzzy(TNorm::lukasiewicz);
		throw ParseError("unknown t-norm '" + t + "'");
	}
	try {
		if (auto a = args_of("finlang"))
			return finlang(split_args(*a));
		if (auto a = args_of("free-nat"))
			return free_nat(split_args(*a));
	} catch (const ValidationError &e) {
		throw ParseError(std::string("bad semiring '") + desc + "': " + e.what());
	}
	throw ParseError("unknown semiring '" + desc + "'");
}

SemiringKind SemiringHandle::kind() const noexcept { return carrier_->kind; }

const std::string &SemiringHandle::name() const noexcept { return carrier_->name; }

std::uint64_t SemiringHandle::modulus() const
{
	if (carrier_->kind != SemiringKind::mod)
		throw DomainError(carrier_->name + " has no modulus");
	return carrier_->k;
}

TNorm SemiringHandle::tnorm() const
{
	if (carrier_->kind != SemiringKind::fuzzy)
		throw DomainError(carrier_->name + " has no t-norm");
	return carrier_->tnorm;
}

const std::vector<std::string> &SemiringHandle::alphabet() const
{
	if (carrier_->kind != SemiringKind::finlang && carrier_->kind != SemiringKind::free_nat)
		throw DomainError(carrier_->name + " has no alphabet");
	return carrier_->alphabet;
}

bool SemiringHandle::finitely_generated() const noexcept
{
	return carrier_->finitely_generated;
}

std::span<const Element> SemiringHandle::generators() const
{
	if (custom_)
		return *custom_;
	return carrier_->generators;
}

SemiringHandle SemiringHandle::with_generators(std::vector<Element> generators) const
{
	for (const auto &g : generators)
		if (!g.belongs_to(*this))
			throw MixedSemiringError("generator " + g.to_string() + " is not in " +
						 carrier_->name);
	SemiringHandle h(carrier_);
	h.custom_ = std::make_shared<const std::vector<Element>>(std::move(generators));
	return h;
}

const Element &SemiringHandle::zero() const { return *carrier_->zero; }

const Element &SemiringHandle::one() const { return *carrier_->one; }

Element SemiringHandle::make(Payload value) const
{
	const Carrier &c = *carrier_;
	auto wrong = [&]() -> Element {
		throw DomainError("payload does not fit carrier " + c.name);
	};
	switch (c.kind) {
	case SemiringKind::boolean:
		if (!std::holds_alternative<bool>(value))
			return wrong();
		break;
	case SemiringKind::nat:
		if (!std::holds_alternative<BigInt>(value))
			return wrong();
		if (std::get<BigInt>(value) < 0)
			throw DomainError("negative value in nat");
		break;
	case SemiringKind::integer:
		if (!std::holds_alternative<BigInt>(value))
			return wrong();
		break;
	case SemiringKind::mod:
		if (!std::holds_alternative<std::uint64_t>(value))
			return wrong();
		if (std::get<std::uint64_t>(value) >= c.k)
			throw DomainError("residue out of range for " + c.name);
		break;
	case SemiringKind::fuzzy: {
		if (!std::holds_alternative<Rational>(value))
			return wrong();
		const Rational &q = std::get<Rational>(value);
		if (q < 0 || q > 1)
			throw DomainError("fuzzy value outside [0,1]");
		break;
	}
	case SemiringKind::maxplus_nat:
	case SemiringKind::minplus_nat: {
		if (!std::holds_alternative<ExtendedNat>(value))
			return wrong();
		auto &x = std::get<ExtendedNat>(value);
		if (x.infinite)
			x.value = 0;
		else if (x.value < 0)
			throw DomainError("negative value in " + c.name);
		break;
	}
	case SemiringKind::finlang:
		if (!std::holds_alternative<WordSet>(value))
			return wrong();
		for (const auto &w : std::get<WordSet>(value))
			check_word(w, c.alphabet);
		break;
	case SemiringKind::smax: {
		if (!std::holds_alternative<RadixWord>(value))
			return wrong();
		const auto &w = std::get<RadixWord>(value);
		if (w && !is_binary(*w))
			throw DomainError("smax word must be binary");
		break;
	}
	case SemiringKind::free_nat: {
		if (!std::holds_alternative<NatPolynomial>(value))
			return wrong();
		auto &p = std::get<NatPolynomial>(value);
		for (auto it = p.begin(); it != p.end();) {
			check_word(it->first, c.alphabet);
			if (it->second < 0)
				throw DomainError("negative coefficient in " + c.name);
			if (it->second == 0)
				it = p.erase(it);
			else
				++it;
		}
		break;
	}
	}
	return Element(carrier_, std::move(value));
}

Element SemiringHandle::from_integer(const BigInt &n) const
{
	const Carrier &c = *carrier_;
	if (n < 0 && c.kind != SemiringKind::integer && c.kind != SemiringKind::mod)
		throw DomainError("negative integer has no image in " + c.name);
	switch (c.kind) {
	case SemiringKind::nat:
	case SemiringKind::integer:
		return Element(carrier_, n);
	case SemiringKind::mod: {
		BigInt r = n % c.k;
		if (r < 0)
			r += c.k;
		return Element(carrier_, static_cast<std::uint64_t>(r));
	}
	case SemiringKind::free_nat:
		if (n == 0)
			return zero();
		return Element(carrier_, NatPolynomial{{"", n}});
	default:
		// Idempotent carriers: 1 + 1 = 1.
		return n == 0 ? zero() : one();
	}
}

Element SemiringHandle::parse_element(std::string_view literal_text) const
{
	const Carrier &c = *carrier_;
	std::string lit = trim(literal_text);
	switch (c.kind) {
	case SemiringKind::boolean:
		if (lit == "0")
			return zero();
		if (lit == "1")
			return one();
		break;
	case SemiringKind::nat:
		return make(parse_natural(lit, lit));
	case SemiringKind::integer:
		return make(parse_integer(lit, lit));
	case SemiringKind::mod: {
		BigInt v = parse_natural(lit, lit);
		if (v >= c.k)
			throw ParseError("residue " + lit + " out of range for " + c.name);
		return make(static_cast<std::uint64_t>(v));
	}
	case SemiringKind::fuzzy: {
		auto slash = lit.find('/');
		Rational q;
		if (slash == std::string::npos) {
			q = Rational(parse_natural(lit, lit));
		} else {
			BigInt num = parse_natural(trim(lit.substr(0, slash)), lit);
			BigInt den = parse_natural(trim(lit.substr(slash + 1)), lit);
			if (den == 0)
				throw ParseError("zero denominator in '" + lit + "'");
			q = Rational(num, den);
		}
		if (q > 1)
			throw ParseError("fuzzy value " + lit + " exceeds 1");
		return make(q);
	}
	case SemiringKind::maxplus_nat:
		if (lit == "-inf")
			return zero();
		return make(ExtendedNat{false, parse_natural(lit, lit)});
	case SemiringKind::minplus_nat:
		if (lit == "inf" || lit == "+inf")
			return zero();
		return make(ExtendedNat{false, parse_natural(lit, lit)});
	case SemiringKind::finlang: {
		if (lit.size() < 2 || lit.front() != '{' || lit.back() != '}')
			break;
		WordSet set;
		std::string_view body(lit);
		body = body.substr(1, body.size() - 2);
		std::size_t pos = 0;
		skip_space(body, pos);
		if (pos == body.size())
			return make(set);
		while (true) {
			skip_space(body, pos);
			set.insert(read_quoted(body, pos, lit));
			skip_space(body, pos);
			if (pos == body.size())
				break;
			if (body[pos] != ',')
				throw ParseError("expected ',' in '" + lit + "'");
			++pos;
		}
		try {
			return make(std::move(set));
		} catch (const DomainError &e) {
			throw ParseError(e.what());
		}
	}
	case SemiringKind::smax:
		if (lit == "-inf")
			return zero();
		if (lit == "\xCE\xB5" || lit == "\"\"")
			return one();
		if (!lit.empty() && is_binary(lit))
			return make(RadixWord{lit});
		break;
	case SemiringKind::free_nat: {
		if (lit == "0")
			return zero();
		NatPolynomial poly;
		std::size_t pos = 0;
		std::string_view body(lit);
		while (true) {
			skip_space(body, pos);
			std::size_t start = pos;
			while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
				++pos;
			BigInt coeff = pos > start ? BigInt(std::string(body.substr(start, pos - start)))
						   : BigInt(1);
			skip_space(body, pos);
			std::string w = read_quoted(body, pos, lit);
			poly[w] += coeff;
			skip_space(body, pos);
			if (pos == body.size())
				break;
			if (body[pos] != '+')
				throw ParseError("expected '+' in '" + lit + "'");
			++pos;
		}
		try {
			return make(std::move(poly));
		} catch (const DomainError &e) {
			throw ParseError(e.what());
		}
	}
	}
	throw ParseError("invalid " + c.name + " literal '" + lit + "'");
}

std::string SemiringHandle::literal_syntax() const
{
	switch (carrier_->kind) {
	case SemiringKind::boolean:
		return "0 | 1";
	case SemiringKind::nat:
		return "decimal natural, e.g. 42";
	case SemiringKind::integer:
		return "decimal integer, e.g. -7";
	case SemiringKind::mod:
		return "decimal residue in [0," + std::to_string(carrier_->k) + ")";
	case SemiringKind::fuzzy:
		return "exact rational p/q in [0,1], e.g. 3/4";
	case SemiringKind::maxplus_nat:
		return "decimal natural or -inf";
	case SemiringKind::minplus_nat:
		return "decimal natural or inf";
	case SemiringKind::finlang:
		return "word set, e.g. {\"ab\", \"\"} (\"\" is the empty word)";
	case SemiringKind::smax:
		return "binary word, ε, or -inf";
	case SemiringKind::free_nat:
		return "polynomial, e.g. 2 \"ab\" + 1 \"ε\" (0 for zero)";
	}
	return "";
}

// ---------------------------------------------------------------------------
// Elements

bool Element::is_zero() const { return value_ == carrier_->zero->value_; }

bool Element::is_one() const { return value_ == carrier_->one->value_; }

bool operator==(const Element &a, const Element &b)
{
	return a.carrier_ == b.carrier_ && a.value_ == b.value_;
}

std::string Element::to_string() const
{
	const Carrier &c = *carrier_;
	switch (c.kind) {
	case SemiringKind::boolean:
		return as<bool>() ? "1" : "0";
	case SemiringKind::nat:
	case SemiringKind::integer:
		return as<BigInt>().str();
	case SemiringKind::mod:
		return std::to_string(as<std::uint64_t>());
	case SemiringKind::fuzzy:
		return rational_literal(as<Rational>());
	case SemiringKind::maxplus_nat: {
		const auto &x = as<ExtendedNat>();
		return x.infinite ? "-inf" : x.value.str();
	}
	case SemiringKind::minplus_nat: {
		const auto &x = as<ExtendedNat>();
		return x.infinite ? "inf" : x.value.str();
	}
	case SemiringKind::finlang: {
		std::string out = "{";
		bool first = true;
		for (const auto &w : as<WordSet>()) {
			if (!first)
				out += ", ";
			first = false;
			out += quote_word(w);
		}
		return out + "}";
	}
	case SemiringKind::smax: {
		const auto &w = as<RadixWord>();
		if (!w)
			return "-inf";
		return display_word(*w);
	}
	case SemiringKind::free_nat: {
		const auto &p = as<NatPolynomial>();
		if (p.empty())
			return "0";
		std::string out;
		for (const auto &[w, n] : p) {
			if (!out.empty())
				out += " + ";
			out += n.str() + " " + quote_word(display_word(w));
		}
		return out;
	}
	}
	return "?";
}

namespace {

Element add_impl(const Carrier &c, const Element &a, const Element &b)
{
	switch (c.kind) {
	case SemiringKind::boolean:
		return c.raw(a.as<bool>() || b.as<bool>());
	case SemiringKind::nat:
	case SemiringKind::integer:
		return c.raw(BigInt(a.as<BigInt>() + b.as<BigInt>()));
	case SemiringKind::mod: {
		unsigned __int128 s = static_cast<unsigned __int128>(a.as<std::uint64_t>()) +
				      b.as<std::uint64_t>();
		return c.raw(static_cast<std::uint64_t>(s % c.k));
	}
	case SemiringKind::fuzzy:
		return c.raw(std::max(a.as<Rational>(), b.as<Rational>()));
	case SemiringKind::maxplus_nat: {
		const auto &x = a.as<ExtendedNat>(), &y = b.as<ExtendedNat>();
		if (x.infinite)
			return b;
		if (y.infinite)
			return a;
		return x.value >= y.value ? a : b;
	}
	case SemiringKind::minplus_nat: {
		const auto &x = a.as<ExtendedNat>(), &y = b.as<ExtendedNat>();
		if (x.infinite)
			return b;
		if (y.infinite)
			return a;
		return x.value <= y.value ? a : b;
	}
	case SemiringKind::finlang: {
		WordSet s = a.as<WordSet>();
		s.insert(b.as<WordSet>().begin(), b.as<WordSet>().end());
		return c.raw(std::move(s));
	}
	case SemiringKind::smax: {
		const auto &x = a.as<RadixWord>(), &y = b.as<RadixWord>();
		if (!x)
			return b;
		if (!y)
			return a;
		return radix_less(*x, *y) ? b : a;
	}
	case SemiringKind::free_nat: {
		NatPolynomial p = a.as<NatPolynomial>();
		for (const auto &[w, n] : b.as<NatPolynomial>())
			p[w] += n;
		return c.raw(std::move(p));
	}
	}
	throw DomainError("unknown carrier");
}

Element mul_impl(const Carrier &c, const Element &a, const Element &b)
{
	switch (c.kind) {
	case SemiringKind::boolean:
		return c.raw(a.as<bool>() && b.as<bool>());
	case SemiringKind::nat:
	case SemiringKind::integer:
		return c.raw(BigInt(a.as<BigInt>() * b.as<BigInt>()));
	case SemiringKind::mod: {
		unsigned __int128 p = static_cast<unsigned __int128>(a.as<std::uint64_t>()) *
				      b.as<std::uint64_t>();
		return c.raw(static_cast<std::uint64_t>(p % c.k));
	}
	case SemiringKind::fuzzy: {
		const Rational &x = a.as<Rational>(), &y = b.as<Rational>();
		switch (c.tnorm) {
		case TNorm::min:
			return c.raw(std::min(x, y));
		case TNorm::product:
			return c.raw(Rational(x * y));
		case TNorm::lukasiewicz: {
			Rational s = x + y - 1;
			return c.raw(s > 0 ? s : Rational(0));
		}
		}
		break;
	}
	case SemiringKind::maxplus_nat:
	case SemiringKind::minplus_nat: {
		const auto &x = a.as<ExtendedNat>(), &y = b.as<ExtendedNat>();
		if (x.infinite || y.infinite)
			return *c.zero;
		return c.raw(ExtendedNat{false, x.value + y.value});
	}
	case SemiringKind::finlang: {
		WordSet s;
		for (const auto &u : a.as<WordSet>())
			for (const auto &v : b.as<WordSet>())
				s.insert(u + v);
		return c.raw(std::move(s));
	}
	case SemiringKind::smax: {
		const auto &x = a.as<RadixWord>(), &y = b.as<RadixWord>();
		if (!x || !y)
			return *c.zero;
		return c.raw(RadixWord{*x + *y});
	}
	case SemiringKind::free_nat: {
		NatPolynomial p;
		for (const auto &[u, m] : a.as<NatPolynomial>())
			for (const auto &[v, n] : b.as<NatPolynomial>())
				p[u + v] += m * n;
		return c.raw(std::move(p));
	}
	}
	throw DomainError("unknown carrier");
}

} // namespace

Element operator+(const Element &a, const Element &b)
{
	if (a.carrier_ != b.carrier_)
		throw MixedSemiringError("cannot add elements of " + a.carrier_->name + " and " +
					 b.carrier_->name);
	return add_impl(*a.carrier_, a, b);
}

Element operator*(const Element &a, const Element &b)
{
	if (a.carrier_ != b.carrier_)
		throw MixedSemiringError("cannot multiply elements of " + a.carrier_->name +
					 " and " + b.carrier_->name);
	return mul_impl(*a.carrier_, a, b);
}

Element arith(const SemiringHandle &sr, ArithOp op, const Element &a, const Element &b)
{
	if (!a.belongs_to(sr) || !b.belongs_to(sr))
		throw MixedSemiringError("operand outside " + sr.name() + ": " + a.to_string() +
					 ", " + b.to_string());
	return op == ArithOp::add ? a + b : a * b;
}

Element sum(const SemiringHandle &sr, std::span<const Element> xs)
{
	Element acc = sr.zero();
	for (const auto &x : xs)
		acc = arith(sr, ArithOp::add, acc, x);
	return acc;
}

Element product(const SemiringHandle &sr, std::span<const Element> xs)
{
	Element acc = sr.one();
	for (const auto &x : xs)
		acc = arith(sr, ArithOp::mul, acc, x);
	return acc;
}

BigInt radix_index(std::string_view x)
{
	if (!is_binary(x))
		throw DomainError("radix_index needs a binary word, got '" + std::string(x) + "'");
	BigInt v = 1;
	for (char ch : x) {
		v <<= 1;
		if (ch == '1')
			v += 1;
	}
	return v - 1;
}

bool radix_less(std::string_view x, std::string_view y)
{
	if (x.size() != y.size())
		return x.size() < y.size();
	return x < y;
}

std::vector<SemiringHandle> standard_instances()
{
	return {
		SemiringHandle::boolean(),
		SemiringHandle::nat(),
		SemiringHandle::integer(),
		SemiringHandle::modulo(6),
		SemiringHandle::fuzzy(TNorm::lukasiewicz),
		SemiringHandle::maxplus_nat(),
		SemiringHandle::minplus_nat(),
		SemiringHandle::finlang({"a", "b"}),
		SemiringHandle::smax(),
		SemiringHandle::free_nat({"a", "b"}),
	};
}

} // namespace semikit
