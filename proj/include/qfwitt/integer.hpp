#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace qf {

using Int = mpz_class;
using Rat = mpq_class;

/// Prime factorization of |n| as (prime, exponent) pairs in increasing order.
/// Trial division, then Pollard-Brent. Primes discovered here are remembered
/// and tried first on later calls.
std::vector<std::pair<Int, int>> factor_integer(const Int& n);
/// Whether factor_integer(n) finishes with a small Pollard budget; the
/// primes found are remembered.
bool factors_cheaply(const Int& n);

bool is_prime(const Int& n);

/// Nonnegative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
Int inv_mod(const Int& a, const Int& m);

Int pow(const Int& base, unsigned long exp);

/// Exponent of p in n (n != 0).
int valuation(const Int& n, const Int& p);
int valuation(const Rat& x, const Int& p);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);

/// A square root of a modulo the odd prime p, assuming (a/p) = 1 or p | a.
Int sqrt_mod(const Int& a, const Int& p);

std::optional<Int> exact_sqrt(const Int& n);
std::optional<Rat> rational_sqrt(const Rat& x);

/// Largest k with k^2 | n, for n != 0, using factor_integer.
Int square_part(const Int& n);

bool is_squarefree(const Int& n);

/// Floor and ceiling of a rational.
Int floor(const Rat& x);
Int ceil(const Rat& x);

} // namespace qf
