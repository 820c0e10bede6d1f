#pragma once

// Elements with prescribed signs at the real places, optionally totally
// positive solutions of congruences and local squares at given primes.

#include "qfwitt/ideals.hpp"

#include <vector>

namespace qf {

/// The elements (theta - a_i)(theta - b_i) built from the isolating
/// intervals; the i-th is negative exactly at place i. Cached per field.
const std::vector<FieldElt>& place_separators(const NumberField& K);

/// rho negative at the places in `negatives` and positive elsewhere.
FieldElt ordering_separation(const NumberField& K, const std::vector<int>& negatives);

/// Totally positive alpha in O_K with ord_P(alpha - target) >= exponent for
/// each entry. `extra` adds that many further multiples of the modulus s.
FieldElt positive_approximation(const NumberField& K, const std::vector<CrtTarget>& data,
                                unsigned long extra = 0);

/// rho with the signs of ordering_separation(negatives) that is a local
/// square at every prime of S.
FieldElt strong_ordering_separation(const NumberField& K, const std::vector<int>& negatives,
                                    const std::vector<PrimeIdeal>& S, unsigned long extra = 0);

} // namespace qf
