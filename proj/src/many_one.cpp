/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#include "semikit/reduce/many_one.hpp"

#include "semikit/algebra/word.hpp"

namespace semikit {

std::string ManyOneReport::to_string() const
{
	if (ok())
		return "ok: " + std::to_string(checked) + " samples";
	return "counterexample " + quote_word(*counterexample) + ": expected " +
	       expected->to_string() + ", got " + actual->to_string();
}

ManyOneReport check_many_one(const CoefficientOracle &r, const CoefficientOracle &s,
			     const WordTransformer &f, const std::vector<std::string> &samples)
{
	ManyOneReport report;
	for (const auto &w : samples) {
		Element want = r(w);
		Element got = s(f(w));
		++report.checked;
		if (!(want == got)) {
			report.counterexample = w;
			report.expected = want;
			report.actual = got;
			break;
		}
	}
	return report;
}

} // namespace semikit
