/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semikit {

// Words are UTF-8 strings; every symbol of an alphabet is one codepoint.

/// Splits a word into its symbols. Throws ParseError on malformed UTF-8.
std::vector<std::string> split_symbols(std::string_view word);

/// Number of symbols in a word.
std::size_t word_length(std::string_view word);

/// Length-then-lexicographic comparison (byte order of UTF-8 agrees with
/// codepoint order).
bool shortlex_less(std::string_view a, std::string_view b);

struct ShortLex {
	using is_transparent = void;
	bool operator()(std::string_view a, std::string_view b) const {
		return shortlex_less(a, b);
	}
};

std::string reverse_word(std::string_view word);

/// "ε" for the empty word, the word itself otherwise.
std::string display_word(std::string_view word);

/// Inverse of display_word.
std::string undisplay_word(std::string_view text);

/// True for a codepoint usable as an alphabet symbol: not whitespace, not
/// one of `"\,(){}`, not ε.
bool is_alphabet_symbol(std::string_view symbol);

/// Throws ValidationError unless the list is a nonempty list of distinct
/// alphabet symbols.
void check_alphabet(const std::vector<std::string> &alphabet);

/// Throws DomainError if a symbol of the word is missing from the alphabet.
void check_word(std::string_view word, const std::vector<std::string> &alphabet);

/// All words of length at most max_len, in shortlex order.
std::vector<std::string> all_words(const std::vector<std::string> &alphabet,
				   std::size_t max_len);

/// Quotes a word for element and polynomial literals: "ab", "" for ε.
std::string quote_word(std::string_view word);

} // namespace semikit
