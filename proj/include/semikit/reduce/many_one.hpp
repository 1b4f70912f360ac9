/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/semiring.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semikit {

/// Coefficient of a series at a word.
using CoefficientOracle = std::function<Element(const std::string &)>;
using WordTransformer = std::function<std::string(const std::string &)>;

struct ManyOneReport {
	std::size_t checked = 0;
	/// First sample w with (s, f(w)) != (r, w), with both coefficients.
	std::optional<std::string> counterexample;
	std::optional<Element> expected;
	std::optional<Element> actual;

	bool ok() const noexcept { return !counterexample; }
	std::string to_string() const;
};

/// Checks (s, f(w)) = (r, w) on each sample in order, stopping at the first
/// failure. Oracle exceptions propagate.
ManyOneReport check_many_one(const CoefficientOracle &r, const CoefficientOracle &s,
			     const WordTransformer &f, const std::vector<std::string> &samples);

} // namespace semikit
