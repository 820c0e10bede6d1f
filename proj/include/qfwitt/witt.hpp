#pragma once

// Global invariants of diagonal forms and the complete invariant table used
// to compare forms.

#include "qfwitt/diagonal_form.hpp"
#include "qfwitt/local.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qf {

/// (-1)^(n(n-1)/2) * prod a_i, square-reduced.
FieldElt disc(const DiagonalForm& q);

/// Primes where some coefficient has odd valuation, in enumeration order.
std::vector<PrimeIdeal> prime_support(const DiagonalForm& q);

/// prime_support(q) together with the dyadic primes.
std::vector<PrimeIdeal> relevant_primes(const DiagonalForm& q);

/// Sorted union without duplicates.
std::vector<PrimeIdeal> merge_primes(std::vector<PrimeIdeal> a, const std::vector<PrimeIdeal>& b);

int signature(const DiagonalForm& q, int place);

int adim(const DiagonalForm& q);
inline int witt_index(const DiagonalForm& q) { return (q.dim() - adim(q)) / 2; }

/// True when a / b is a square in K.
bool same_square_class(const FieldElt& a, const FieldElt& b);

struct WittCertificate {
    int dim = 0;
    FieldElt disc;
    std::vector<int> signatures;
    std::vector<std::pair<PrimeIdeal, int>> hasse;
    int adim = 0;
    int witt_index = 0;
};

/// Throws MissingPrimes unless prime_set contains relevant_primes(q).
WittCertificate certificate(const DiagonalForm& q, const std::vector<PrimeIdeal>& prime_set);

/// Same invariants up to dim and Witt index.
bool same_class_data(const WittCertificate& a, const WittCertificate& b);

enum class Equivalence { Isometric, Similar };

bool forms_equivalent(const DiagonalForm& q1, const DiagonalForm& q2, Equivalence mode);

} // namespace qf
