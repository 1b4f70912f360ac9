/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The semikit authors
 */

#pragma once

#include "semikit/algebra/homomorphism.hpp"
#include "semikit/machine/machine.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace semikit {

/// Largest weight normalize_unit_weights expands by default.
inline constexpr std::uint64_t default_unit_copy_cap = 4096;

/// Machine over nat whose weights are all 1: a transition e of weight v
/// becomes v parallel paths p -> [e,i] -> q, the first step rewriting the
/// read symbol in place. Accepting paths double in length, so the bound
/// (c,k,d) becomes (2c,k,2d). Throws CapExceeded for weights above the cap.
Machine normalize_unit_weights(const Machine &m,
			       std::uint64_t max_weight = default_unit_copy_cap);

/// Adds a fresh accepting state entered by a weight-one stationary step from
/// every former accepting state; the bound (c,k,d) becomes (c,k,d+1).
Machine single_accepting(const Machine &m);

/// Machine over int counting accepting minus rejecting computations of a
/// machine over bool. Rejecting states must not have outgoing transitions.
Machine gap_machine(const Machine &m);

/// Throws MaximalComputationWithoutVerdict if a maximal computation on w
/// ends in a state that is neither accepting nor rejecting.
void check_total_verdicts(const Machine &m, std::string_view w,
			  std::optional<std::size_t> bound = std::nullopt);

/// Image of the machine under h; transitions whose weight maps to zero are
/// removed.
Machine apply_hom(const Homomorphism &h, const Machine &m);

/// Largest n accepted by pal_coefficient by default.
inline constexpr std::size_t default_pal_cap = 14;

/// The set { w#reverse(w) : w in {a,b}^n } in finlang(a,b,#).
Element pal_coefficient(std::size_t n, std::size_t cap = default_pal_cap);

/// A name built from base that is not yet a state or work symbol of m.
std::string fresh_name(const Machine &m, const std::string &base);

} // namespace semikit
