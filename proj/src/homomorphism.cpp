/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/algebra/homomorphism.hpp"

#include "semikit/error.hpp"

namespace semikit {

Homomorphism Homomorphism::nat_to_bool()
{
	auto target = SemiringHandle::boolean();
	return Homomorphism(SemiringHandle::nat(), target, "nat->bool", [target](const Element &x) {
		return x.is_zero() ? target.zero() : target.one();
	});
}

Homomorphism Homomorphism::nat_to_mod(std::uint64_t k)
{
	auto target = SemiringHandle::modulo(k);
	return Homomorphism(SemiringHandle::nat(), target, "nat->" + target.name(),
			    [target](const Element &x) { return target.from_integer(x.as<BigInt>()); });
}

Homomorphism Homomorphism::int_to_mod(std::uint64_t k)
{
	auto target = SemiringHandle::modulo(k);
	return Homomorphism(SemiringHandle::integer(), target, "int->" + target.name(),
			    [target](const Element &x) { return target.from_integer(x.as<BigInt>()); });
}

Homomorphism Homomorphism::nat_to_int()
{
	auto target = SemiringHandle::integer();
	return Homomorphism(SemiringHandle::nat(), target, "nat->int",
			    [target](const Element &x) { return target.from_integer(x.as<BigInt>()); });
}

Homomorphism Homomorphism::free_nat_to(const SemiringHandle &source, const SemiringHandle &target,
				       const std::map<std::string, Element> &letters)
{
	if (source.kind() != SemiringKind::free_nat)
		throw DomainError("free_nat_to needs a free-nat source, got " + source.name());
	for (const auto &s : source.alphabet()) {
		auto it = letters.find(s);
		if (it == letters.end())
			throw DomainError("letter '" + s + "' has no image");
		if (!it->second.belongs_to(target))
			throw MixedSemiringError("image of '" + s + "' is not in " + target.name());
	}
	auto images = letters;
	return Homomorphism(source, target, source.name() + "->" + target.name(),
			    [target, images](const Element &x) {
				    Element total = target.zero();
				    for (const auto &[w, n] : x.as<NatPolynomial>()) {
					    Element term = target.from_integer(n);
					    for (const auto &s : split_symbols(w))
						    term = term * images.at(s);
					    total = total + term;
				    }
				    return total;
			    });
}

Homomorphism Homomorphism::finlang_to_bool(const SemiringHandle &source)
{
	if (source.kind() != SemiringKind::finlang)
		throw DomainError("finlang_to_bool needs a finlang source, got " + source.name());
	auto target = SemiringHandle::boolean();
	return Homomorphism(source, target, source.name() + "->bool", [target](const Element &x) {
		return x.is_zero() ? target.zero() : target.one();
	});
}

Element Homomorphism::operator()(const Element &x) const
{
	if (!x.belongs_to(source_))
		throw DomainError("homomorphism " + name_ + " applied to element of " +
				  x.semiring().name());
	return map_(x);
}

Element apply_hom(const Homomorphism &h, const Element &x) { return h(x); }

MappedTerm apply_hom(const Homomorphism &h, const SemiringHandle &source, const Term &t)
{
	if (!(source == h.source()))
		throw DomainError("homomorphism " + h.name() + " applied to a term over " +
				  source.name());
	std::vector<Element> images;
	for (const auto &g : source.generators())
		images.push_back(h(g));
	return MappedTerm{h.target().with_generators(std::move(images)), t};
}

} // namespace semikit
