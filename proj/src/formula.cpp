/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/logic/formula.hpp"

#include "semikit/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace semikit {

// ---------------------------------------------------------------------------
// Variables

namespace {

struct VariableTable {
	std::mutex mu;
	std::deque<std::string> names;
	std::unordered_map<std::string, VarId> ids;
};

VariableTable &variables()
{
	static VariableTable table;
	return table;
}

} // namespace

VarId intern_variable(std::string_view name)
{
	auto &t = variables();
	std::lock_guard<std::mutex> lock(t.mu);
	auto it = t.ids.find(std::string(name));
	if (it != t.ids.end())
		return it->second;
	if (!is_variable_name(name))
		throw ParseError("invalid variable name '" + std::string(name) + "'");
	VarId id = static_cast<VarId>(t.names.size());
	t.names.emplace_back(name);
	t.ids.emplace(t.names.back(), id);
	return id;
}

const std::string &variable_name(VarId id)
{
	auto &t = variables();
	std::lock_guard<std::mutex> lock(t.mu);
	if (id >= t.names.size())
		throw DomainError("unknown variable id " + std::to_string(id));
	return t.names[id];
}

bool is_variable_name(std::string_view name)
{
	if (name.empty() || name == "or" || name == "and" || name == "not" || name == "const")
		return false;
	for (char ch : name) {
		unsigned char u = static_cast<unsigned char>(ch);
		if (u <= 0x20 || u == 0x7F || ch == '(' || ch == ')' || ch == '"')
			return false;
	}
	return true;
}

// ---------------------------------------------------------------------------
// Formula nodes

struct Formula::Node {
	Kind kind;
	VarId var = 0;
	std::optional<Element> value{};
	std::vector<Formula> children{};
	std::uint64_t size = 1;
	std::optional<SemiringHandle> sr{};
};

const SemiringHandle *Formula::constant_semiring() const noexcept
{
	return node_->sr ? &*node_->sr : nullptr;
}

Formula Formula::var(std::string_view name) { return var(intern_variable(name)); }

Formula Formula::var(VarId id)
{
	Node n{Kind::var};
	n.var = id;
	return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::neg_var(std::string_view name) { return neg_var(intern_variable(name)); }

Formula Formula::neg_var(VarId id)
{
	Node n{Kind::neg_var};
	n.var = id;
	return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::constant(Element value)
{
	Node n{Kind::constant};
	n.sr = value.semiring();
	n.value = std::move(value);
	return Formula(std::make_shared<const Node>(std::move(n)));
}

namespace {

std::optional<SemiringHandle> merge_semiring(const SemiringHandle *a, const SemiringHandle *b)
{
	if (a && b && !(*a == *b))
		throw MixedSemiringError("formula mixes constants of " + a->name() + " and " +
					 b->name());
	if (a)
		return *a;
	if (b)
		return *b;
	return std::nullopt;
}

} // namespace

Formula Formula::disj(Formula left, Formula right)
{
	Node n{Kind::disj};
	n.sr = merge_semiring(left.constant_semiring(), right.constant_semiring());
	n.size = 1 + left.size() + right.size();
	n.children = {std::move(left), std::move(right)};
	return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::conj(Formula left, Formula right)
{
	Node n{Kind::conj};
	n.sr = merge_semiring(left.constant_semiring(), right.constant_semiring());
	n.size = 1 + left.size() + right.size();
	n.children = {std::move(left), std::move(right)};
	return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

VarId Formula::variable() const
{
	if (node_->kind != Kind::var && node_->kind != Kind::neg_var)
		throw DomainError("formula is not a literal");
	return node_->var;
}

const Element &Formula::value() const
{
	if (node_->kind != Kind::constant)
		throw DomainError("formula is not a constant");
	return *node_->value;
}

const Formula &Formula::left() const
{
	if (node_->children.empty())
		throw DomainError("formula has no operands");
	return node_->children[0];
}

const Formula &Formula::right() const
{
	if (node_->children.empty())
		throw DomainError("formula has no operands");
	return node_->children[1];
}

std::uint64_t Formula::size() const noexcept { return node_->size; }

namespace {

void print(const Formula &f, std::string &out)
{
	switch (f.kind()) {
	case Formula::Kind::var:
		out += variable_name(f.variable());
		return;
	case Formula::Kind::neg_var:
		out += "(not ";
		out += variable_name(f.variable());
		out += ")";
		return;
	case Formula::Kind::constant:
		out += "(const ";
		out += f.value().to_string();
		out += ")";
		return;
	case Formula::Kind::disj:
	case Formula::Kind::conj:
		out += f.kind() == Formula::Kind::disj ? "(or " : "(and ";
		print(f.left(), out);
		out += " ";
		print(f.right(), out);
		out += ")";
		return;
	}
}

struct FormulaParser {
	const SemiringHandle &sr;
	std::string_view s;
	std::size_t pos = 0;

	void skip()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			++pos;
	}

	[[noreturn]] void fail(const std::string &msg)
	{
		throw ParseError("formula: " + msg + " at offset " + std::to_string(pos));
	}

	std::string_view atom()
	{
		skip();
		std::size_t start = pos;
		while (pos < s.size()) {
			unsigned char u = static_cast<unsigned char>(s[pos]);
			if (u <= 0x20 || s[pos] == '(' || s[pos] == ')')
				break;
			++pos;
		}
		if (pos == start)
			fail("expected a name");
		return s.substr(start, pos - start);
	}

	void expect_close()
	{
		skip();
		if (pos >= s.size() || s[pos] != ')')
			fail("expected ')'");
		++pos;
	}

	Formula parse()
	{
		skip();
		if (pos >= s.size())
			fail("unexpected end");
		if (s[pos] != '(') {
			std::string_view name = atom();
			if (!is_variable_name(name))
				fail("invalid variable name '" + std::string(name) + "'");
			return Formula::var(name);
		}
		++pos;
		std::string_view head = atom();
		if (head == "not") {
			std::string_view name = atom();
			if (!is_variable_name(name))
				fail("invalid variable name '" + std::string(name) + "'");
			expect_close();
			return Formula::neg_var(name);
		}
		if (head == "const") {
			skip();
			std::size_t start = pos;
			bool quoted = false;
			while (pos < s.size() && (quoted || s[pos] != ')')) {
				if (s[pos] == '"')
					quoted = !quoted;
				++pos;
			}
			if (pos >= s.size())
				fail("unterminated constant");
			Element e = sr.parse_element(s.substr(start, pos - start));
			++pos;
			return Formula::constant(std::move(e));
		}
		if (head == "or" || head == "and") {
			Formula l = parse();
			Formula r = parse();
			expect_close();
			return head == "or" ? Formula::disj(std::move(l), std::move(r))
					    : Formula::conj(std::move(l), std::move(r));
		}
		fail("unknown operator '" + std::string(head) + "'");
	}
};

} // namespace

std::string Formula::to_string() const
{
	std::string out;
	print(*this, out);
	return out;
}

Formula Formula::parse(const SemiringHandle &sr, std::string_view text)
{
	FormulaParser p{sr, text};
	Formula f = p.parse();
	p.skip();
	if (p.pos != text.size())
		p.fail("trailing input");
	return f;
}

bool operator==(const Formula &a, const Formula &b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.kind() != b.kind() || a.size() != b.size())
		return false;
	switch (a.kind()) {
	case Formula::Kind::var:
	case Formula::Kind::neg_var:
		return a.variable() == b.variable();
	case Formula::Kind::constant:
		return a.value() == b.value();
	default:
		return a.left() == b.left() && a.right() == b.right();
	}
}

Formula big_or(const SemiringHandle &sr, const std::vector<Formula> &xs)
{
	if (xs.empty())
		return Formula::constant(sr.zero());
	Formula acc = xs.back();
	for (std::size_t i = xs.size() - 1; i-- > 0;)
		acc = Formula::disj(xs[i], std::move(acc));
	return acc;
}

Formula big_and(const SemiringHandle &sr, const std::vector<Formula> &xs)
{
	if (xs.empty())
		return Formula::constant(sr.one());
	Formula acc = xs.back();
	for (std::size_t i = xs.size() - 1; i-- > 0;)
		acc = Formula::conj(xs[i], std::move(acc));
	return acc;
}

namespace {

std::vector<Formula> spine(const Formula &f, Formula::Kind kind)
{
	std::vector<Formula> out;
	const Formula *cur = &f;
	while (cur->kind() == kind) {
		out.push_back(cur->left());
		cur = &cur->right();
	}
	out.push_back(*cur);
	return out;
}

} // namespace

std::vector<Formula> conjuncts(const Formula &f) { return spine(f, Formula::Kind::conj); }

std::vector<Formula> disjuncts(const Formula &f) { return spine(f, Formula::Kind::disj); }

std::optional<std::vector<Formula>> split_conjunction(const Formula &f, std::size_t n)
{
	if (n == 0)
		return std::nullopt;
	std::vector<Formula> out;
	const Formula *cur = &f;
	while (out.size() + 1 < n) {
		if (cur->kind() != Formula::Kind::conj)
			return std::nullopt;
		out.push_back(cur->left());
		cur = &cur->right();
	}
	out.push_back(*cur);
	return out;
}

// ---------------------------------------------------------------------------
// Assignments and evaluation

void Assignment::set(VarId id, bool value)
{
	if (id >= values_.size())
		values_.resize(id + 1, -1);
	values_[id] = value ? 1 : 0;
}

void Assignment::unset(VarId id)
{
	if (id < values_.size())
		values_[id] = -1;
}

bool operator==(const Assignment &a, const Assignment &b)
{
	std::size_t n = std::max(a.values_.size(), b.values_.size());
	for (std::size_t i = 0; i < n; ++i) {
		std::int8_t x = i < a.values_.size() ? a.values_[i] : -1;
		std::int8_t y = i < b.values_.size() ? b.values_[i] : -1;
		if (x != y)
			return false;
	}
	return true;
}

namespace {

Element eval_rec(const SemiringHandle &sr, const Formula &f, const Assignment &v)
{
	switch (f.kind()) {
	case Formula::Kind::var:
	case Formula::Kind::neg_var: {
		auto x = v.get(f.variable());
		if (!x)
			throw UnassignedVariable("variable '" + variable_name(f.variable()) +
						 "' is unassigned");
		bool truth = f.kind() == Formula::Kind::var ? *x : !*x;
		return truth ? sr.one() : sr.zero();
	}
	case Formula::Kind::constant:
		if (!f.value().belongs_to(sr))
			throw MixedSemiringError("constant " + f.value().to_string() + " is not in " +
						 sr.name());
		return f.value();
	case Formula::Kind::disj:
		return eval_rec(sr, f.left(), v) + eval_rec(sr, f.right(), v);
	case Formula::Kind::conj:
		return eval_rec(sr, f.left(), v) * eval_rec(sr, f.right(), v);
	}
	throw DomainError("bad formula");
}

std::optional<Element> partial_rec(const SemiringHandle &sr, const Formula &f,
				   const Assignment &v)
{
	switch (f.kind()) {
	case Formula::Kind::var:
	case Formula::Kind::neg_var: {
		auto x = v.get(f.variable());
		if (!x)
			return std::nullopt;
		bool truth = f.kind() == Formula::Kind::var ? *x : !*x;
		return truth ? sr.one() : sr.zero();
	}
	case Formula::Kind::constant:
		if (!f.value().belongs_to(sr))
			throw MixedSemiringError("constant " + f.value().to_string() + " is not in " +
						 sr.name());
		return f.value();
	case Formula::Kind::disj: {
		auto l = partial_rec(sr, f.left(), v);
		if (!l)
			return std::nullopt;
		auto r = partial_rec(sr, f.right(), v);
		if (!r)
			return std::nullopt;
		return *l + *r;
	}
	case Formula::Kind::conj: {
		auto l = partial_rec(sr, f.left(), v);
		if (l && l->is_zero())
			return sr.zero();
		auto r = partial_rec(sr, f.right(), v);
		if (r && r->is_zero())
			return sr.zero();
		if (!l || !r)
			return std::nullopt;
		return *l * *r;
	}
	}
	throw DomainError("bad formula");
}

void collect_vars(const Formula &f, std::set<VarId> &out)
{
	std::unordered_set<const void *> seen;
	std::vector<const Formula *> stack{&f};
	while (!stack.empty()) {
		const Formula *cur = stack.back();
		stack.pop_back();
		if (!seen.insert(cur->identity()).second)
			continue;
		switch (cur->kind()) {
		case Formula::Kind::var:
		case Formula::Kind::neg_var:
			out.insert(cur->variable());
			break;
		case Formula::Kind::constant:
			break;
		default:
			stack.push_back(&cur->right());
			stack.push_back(&cur->left());
		}
	}
}

} // namespace

Element eval_formula(const SemiringHandle &sr, const Formula &f, const Assignment &v)
{
	return eval_rec(sr, f, v);
}

std::optional<Element> eval_partial(const SemiringHandle &sr, const Formula &f,
				    const Assignment &v)
{
	return partial_rec(sr, f, v);
}

std::set<VarId> free_var_ids(const Formula &f)
{
	std::set<VarId> out;
	collect_vars(f, out);
	return out;
}

std::set<std::string> free_vars(const Formula &f)
{
	std::set<std::string> out;
	for (VarId id : free_var_ids(f))
		out.insert(variable_name(id));
	return out;
}

Element sat_value_brute(const SemiringHandle &sr, const Formula &f, std::size_t cap)
{
	std::vector<VarId> vars;
	for (const auto &name : free_vars(f))
		vars.push_back(intern_variable(name));
	if (vars.size() > cap)
		throw VarCapExceeded("formula has " + std::to_string(vars.size()) +
				     " variables, above the brute-force cap of " + std::to_string(cap));
	const std::size_t n = vars.size();
	Element total = sr.zero();
	Assignment v;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
		// The first variable is the most significant bit, so assignments
		// come in lexicographic order.
		for (std::size_t i = 0; i < n; ++i)
			v.set(vars[i], (mask >> (n - 1 - i)) & 1);
		total = total + eval_formula(sr, f, v);
	}
	return total;
}

Formula apply_hom(const Homomorphism &h, const Formula &f)
{
	switch (f.kind()) {
	case Formula::Kind::var:
	case Formula::Kind::neg_var:
		return f;
	case Formula::Kind::constant:
		return Formula::constant(h(f.value()));
	case Formula::Kind::disj:
		return Formula::disj(apply_hom(h, f.left()), apply_hom(h, f.right()));
	case Formula::Kind::conj:
		return Formula::conj(apply_hom(h, f.left()), apply_hom(h, f.right()));
	}
	throw DomainError("bad formula");
}

} // namespace semikit
