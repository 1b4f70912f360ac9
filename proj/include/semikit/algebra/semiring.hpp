/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace semikit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class SemiringKind {
	boolean,
	nat,
	integer,
	mod,
	fuzzy,
	maxplus_nat,
	minplus_nat,
	finlang,
	smax,
	free_nat,
};

enum class TNorm { min, product, lukasiewicz };

/// A natural number or the infinity of the carrier (-inf for max-plus,
/// +inf for min-plus).
struct ExtendedNat {
	bool infinite = false;
	BigInt value;

	friend bool operator==(const ExtendedNat &, const ExtendedNat &) = default;
};

using WordSet = std::set<std::string, ShortLex>;

/// A binary word, or nullopt for -inf.
using RadixWord = std::optional<std::string>;

/// Finite map word -> positive natural.
using NatPolynomial = std::map<std::string, BigInt, ShortLex>;

// bool: boolean; nat, int: BigInt; mod: uint64_t; fuzzy: Rational;
// max/min-plus: ExtendedNat; finlang: WordSet; smax: RadixWord;
// free-nat: NatPolynomial.
using Payload = std::variant<bool, BigInt, std::uint64_t, Rational, ExtendedNat,
			     WordSet, RadixWord, NatPolynomial>;

namespace detail {
struct Carrier;
}

class Element;

/// A concrete semiring instance. Handles are cheap to copy; two handles
/// compare equal when they denote the same carrier, whatever generator list
/// they carry.
class SemiringHandle {
public:
	static SemiringHandle boolean();
	static SemiringHandle nat();
	static SemiringHandle integer();
	static SemiringHandle modulo(std::uint64_t k);
	static SemiringHandle fuzzy(TNorm tnorm);
	static SemiringHandle maxplus_nat();
	static SemiringHandle minplus_nat();
	static SemiringHandle finlang(const std::vector<std::string> &alphabet);
	static SemiringHandle smax();
	static SemiringHandle free_nat(const std::vector<std::string> &alphabet);

	/// Parses `bool`, `nat`, `int`, `mod(3)`, `fuzzy(min)`, `maxplus-nat`,
	/// `minplus-nat`, `finlang(a,b)`, `smax`, `free-nat(a,b)`.
	static SemiringHandle parse(std::string_view text);

	SemiringKind kind() const noexcept;
	const std::string &name() const noexcept;
	std::uint64_t modulus() const;
	TNorm tnorm() const;
	const std::vector<std::string> &alphabet() const;

	/// Whether the canonical generator list generates the carrier.
	bool finitely_generated() const noexcept;

	/// The canonical generators, or the list attached by with_generators.
	std::span<const Element> generators() const;
	bool has_custom_generators() const noexcept { return custom_ != nullptr; }
	SemiringHandle with_generators(std::vector<Element> generators) const;

	const Element &zero() const;
	const Element &one() const;

	/// Validates the payload against the carrier.
	Element make(Payload value) const;

	/// Image of an integer under the unique map from the integers (or the
	/// naturals) into this carrier. Negative values need an additive
	/// inverse and are only accepted by int and mod.
	Element from_integer(const BigInt &n) const;

	Element parse_element(std::string_view literal) const;

	/// Human readable description of the literal syntax.
	std::string literal_syntax() const;

	friend bool operator==(const SemiringHandle &a, const SemiringHandle &b) noexcept
	{
		return a.carrier_ == b.carrier_;
	}

private:
	friend class Element;
	explicit SemiringHandle(const detail::Carrier *carrier) : carrier_(carrier) {}

	const detail::Carrier *carrier_;
	std::shared_ptr<const std::vector<Element>> custom_;
};

/// A value in the carrier of a semiring instance.
class Element {
public:
	SemiringHandle semiring() const { return SemiringHandle(carrier_); }
	const Payload &payload() const noexcept { return value_; }

	template <class T>
	const T &as() const { return std::get<T>(value_); }

	bool is_zero() const;
	bool is_one() const;
	bool belongs_to(const SemiringHandle &sr) const noexcept
	{
		return carrier_ == sr.carrier_;
	}

	/// Literal in the syntax accepted by SemiringHandle::parse_element.
	std::string to_string() const;

	friend bool operator==(const Element &a, const Element &b);
	friend Element operator+(const Element &a, const Element &b);
	friend Element operator*(const Element &a, const Element &b);
	friend std::ostream &operator<<(std::ostream &os, const Element &e)
	{
		return os << e.to_string();
	}

private:
	friend class SemiringHandle;
	friend struct detail::Carrier;
	Element(const detail::Carrier *carrier, Payload value)
		: carrier_(carrier), value_(std::move(value)) {}

	const detail::Carrier *carrier_;
	Payload value_;
};

enum class ArithOp { add, mul };

/// a+b or a*b in sr. Throws MixedSemiringError unless both operands belong
/// to sr.
Element arith(const SemiringHandle &sr, ArithOp op, const Element &a, const Element &b);

/// Sum of a list; zero for the empty list.
Element sum(const SemiringHandle &sr, std::span<const Element> xs);

/// Ordered product of a list; one for the empty list.
Element product(const SemiringHandle &sr, std::span<const Element> xs);

/// num(1x) - 1 for a binary word x; an order isomorphism from the radix
/// order onto the naturals.
BigInt radix_index(std::string_view x);

/// Radix order: shorter words first, then lexicographic.
bool radix_less(std::string_view x, std::string_view y);

/// The instances exercised by the test suites, one per carrier family.
std::vector<SemiringHandle> standard_instances();

} // namespace semikit
