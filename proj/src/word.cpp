/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/algebra/word.hpp"

#include "semikit/error.hpp"

#include <algorithm>
#include <set>

namespace semikit {

namespace {

std::size_t codepoint_width(unsigned char lead)
{
	if (lead < 0x80)
		return 1;
	if ((lead & 0xE0) == 0xC0)
		return 2;
	if ((lead & 0xF0) == 0xE0)
		return 3;
	if ((lead & 0xF8) == 0xF0)
		return 4;
	return 0;
}

const std::string epsilon = "\xCE\xB5";

} // namespace

std::vector<std::string> split_symbols(std::string_view word)
{
	std::vector<std::string> out;
	std::size_t i = 0;
	while (i < word.size()) {
		std::size_t w = codepoint_width(static_cast<unsigned char>(word[i]));
		if (w == 0 || i + w > word.size())
			throw ParseError("malformed UTF-8 in word '" + std::string(word) + "'");
		for (std::size_t k = 1; k < w; ++k)
			if ((static_cast<unsigned char>(word[i + k]) & 0xC0) != 0x80)
				throw ParseError("malformed UTF-8 in word '" + std::string(word) + "'");
		out.emplace_back(word.substr(i, w));
		i += w;
	}
	return out;
}

std::size_t word_length(std::string_view word)
{
	std::size_t n = 0;
	for (char ch : word)
		if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80)
			++n;
	return n;
}

bool shortlex_less(std::string_view a, std::string_view b)
{
	std::size_t la = word_length(a), lb = word_length(b);
	if (la != lb)
		return la < lb;
	return a < b;
}

std::string reverse_word(std::string_view word)
{
	auto syms = split_symbols(word);
	std::string out;
	for (auto it = syms.rbegin(); it != syms.rend(); ++it)
		out += *it;
	return out;
}

std::string display_word(std::string_view word)
{
	return word.empty() ? epsilon : std::string(word);
}

std::string undisplay_word(std::string_view text)
{
	return text == epsilon ? std::string() : std::string(text);
}

bool is_alphabet_symbol(std::string_view symbol)
{
	if (symbol.empty() || symbol == epsilon)
		return false;
	std::vector<std::string> parts;
	try {
		parts = split_symbols(symbol);
	} catch (const ParseError &) {
		return false;
	}
	if (parts.size() != 1)
		return false;
	unsigned char c = static_cast<unsigned char>(symbol[0]);
	return !(c <= 0x20 || c == 0x7F || c == '"' || c == '\\' || c == ',' ||
		 c == '(' || c == ')' || c == '{' || c == '}');
}

void check_alphabet(const std::vector<std::string> &alphabet)
{
	if (alphabet.empty())
		throw ValidationError("alphabet must be nonempty");
	std::set<std::string> seen;
	for (const auto &s : alphabet) {
		if (!is_alphabet_symbol(s))
			throw ValidationError("invalid alphabet symbol '" + s + "'");
		if (!seen.insert(s).second)
			throw ValidationError("duplicate alphabet symbol '" + s + "'");
	}
}

void check_word(std::string_view word, const std::vector<std::string> &alphabet)
{
	for (const auto &s : split_symbols(word))
		if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end())
			throw DomainError("symbol '" + s + "' of word '" + std::string(word) +
					  "' is not in the alphabet");
}

std::vector<std::string> all_words(const std::vector<std::string> &alphabet,
				   std::size_t max_len)
{
	std::vector<std::string> sorted = alphabet;
	std::sort(sorted.begin(), sorted.end());
	std::vector<std::string> out{""};
	std::vector<std::string> layer{""};
	for (std::size_t len = 1; len <= max_len; ++len) {
		std::vector<std::string> next;
		next.reserve(layer.size() * sorted.size());
		for (const auto &w : layer)
			for (const auto &s : sorted)
				next.push_back(w + s);
		out.insert(out.end(), next.begin(), next.end());
		layer = std::move(next);
	}
	return out;
}

std::string quote_word(std::string_view word)
{
	return "\"" + std::string(word) + "\"";
}

} // namespace semikit
