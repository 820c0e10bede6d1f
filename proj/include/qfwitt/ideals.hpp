#pragma once

// Prime ideals of O_K = Z[omega], valuations, factorization of principal
// ideals, residue rings O/P^k, the Chinese remainder theorem over O_K, and
// Z-lattice ideals used by the class group code.

#include "qfwitt/field.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qf {

class PrimeIdeal {
public:
    PrimeIdeal() = default;

    const NumberField& field() const { return *field_; }
    const Int& under() const { return p_; }
    int residue_degree() const { return f_; }
    int ram_index() const { return e_; }
    const Int& norm() const { return norm_; }
    bool is_inert() const { return inert_; }
    bool is_dyadic() const { return p_ == 2; }
    /// Root of the minimal polynomial of omega mod p singled out by this
    /// prime (split and ramified primes); -1 for inert primes.
    const Int& root() const { return r_; }
    /// Element of valuation exactly 1, lying in O_K.
    const FieldElt& uniformizer() const { return pi_; }
    /// Second generator omega - root; only for split and ramified primes.
    FieldElt second_generator() const;

    /// "(p)" or "(p, g)" in the element text syntax.
    std::string str() const;

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b)
    {
        return a.field_ == b.field_ && a.p_ == b.p_ && a.r_ == b.r_;
    }
    friend bool operator!=(const PrimeIdeal& a, const PrimeIdeal& b) { return !(a == b); }
    /// Enumeration order: norm, then rational prime, then root.
    friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);

private:
    friend std::vector<PrimeIdeal> primes_above(const NumberField& K, const Int& p);

    const NumberField* field_ = nullptr;
    Int p_;
    int f_ = 1;
    int e_ = 1;
    Int norm_;
    bool inert_ = false;
    Int r_ = -1;
    FieldElt pi_;
};

/// The primes of O_K over the rational prime p, ordered by root.
std::vector<PrimeIdeal> primes_above(const NumberField& K, const Int& p);
std::vector<PrimeIdeal> dyadic_primes(const NumberField& K);

/// Parse "(p)", "(p, g)" or "(g)" (a principal prime).
PrimeIdeal parse_prime(const NumberField& K, std::string_view text);

int ord_at(const FieldElt& x, const PrimeIdeal& P);

struct IdealFactorization {
    FieldElt element;
    std::vector<std::pair<PrimeIdeal, int>> factors;

    int exponent(const PrimeIdeal& P) const;
};

IdealFactorization factor_principal(const FieldElt& x);

/// Primes where x has odd valuation.
std::vector<PrimeIdeal> odd_support(const FieldElt& x);

// ---------------------------------------------------------------- residues

/// Hermite basis of P^k in omega coordinates: lower triangular rows, row i
/// has zeros after column i and a positive diagonal.
std::vector<std::vector<Int>> prime_power_basis(const PrimeIdeal& P, int k);

/// Canonical representative in omega coordinates of x mod P^k, for x with
/// ord_P(x) >= 0.
std::vector<Int> residue(const FieldElt& x, const PrimeIdeal& P, int k);

/// O/P^k with small machine-word coordinates, for exhaustive searches.
class LocalRing {
public:
    using Elem = std::array<std::int64_t, 3>;

    LocalRing(const PrimeIdeal& P, int k);

    const PrimeIdeal& prime() const { return P_; }
    int precision() const { return k_; }
    std::size_t size() const { return size_; }

    Elem reduce(const FieldElt& x) const;
    Elem from_index(std::size_t i) const;
    std::size_t index(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;
    /// Valuation of a, capped at the precision.
    int ord(const Elem& a) const;
    bool is_unit(const Elem& a) const { return ord(a) == 0; }
    FieldElt lift(const Elem& a) const;

private:
    Elem normalize(std::array<std::int64_t, 5> v) const;

    PrimeIdeal P_;
    int k_;
    int n_;
    std::vector<std::vector<std::int64_t>> hnf_;
    std::vector<std::int64_t> g_; // omega polynomial reduced mod the exponent
    std::size_t size_;
    std::vector<std::vector<std::vector<std::int64_t>>> level_hnf_; // P^j, j = 1..k
};

// ---------------------------------------------------------------- CRT

struct CrtTarget {
    PrimeIdeal prime;
    int exponent;
    FieldElt target;
};

/// beta in O_K with ord_P(beta - target) >= exponent for each entry.
FieldElt crt(const std::vector<CrtTarget>& data);

// ---------------------------------------------------------------- enumeration

struct PrimeCursor {
    Int norm = 1;
    std::size_t index = 0;
};

/// Next prime in (norm, p, root) order that is not in S; advances the cursor.
PrimeIdeal next_prime_outside(const NumberField& K, const std::vector<PrimeIdeal>& S, PrimeCursor& cursor);

/// All primes of norm at most `bound`, in enumeration order.
std::vector<PrimeIdeal> primes_up_to(const NumberField& K, const Int& bound);

// ---------------------------------------------------------------- lattices

/// Nonzero integral ideal of O_K as a Z-lattice in omega coordinates.
/// Degree 2: Hermite rows (a, 0), (b, c) with 0 <= b < a. Degree 1: (a).
class Ideal {
public:
    static Ideal unit(const NumberField& K);
    static Ideal of(const PrimeIdeal& P);
    static Ideal principal(const FieldElt& x);
    static Ideal from_generators(const NumberField& K, const std::vector<std::vector<Int>>& gens);

    const NumberField& field() const { return *field_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    Int norm() const { return a_ * c_; }
    bool contains(const std::vector<Int>& w) const;
    Ideal conj() const;
    Ideal pow(long k) const;
    std::string str() const;

    friend Ideal operator*(const Ideal& x, const Ideal& y);
    friend bool operator==(const Ideal& x, const Ideal& y)
    {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

private:
    const NumberField* field_ = nullptr;
    Int a_ = 1, b_ = 0, c_ = 1;
};

/// x - m for some m in M with small sum of squared embeddings; x integral,
/// degree 2.
FieldElt reduce_modulo(const FieldElt& x, const Ideal& M);

/// The product of P^k over the targets.
Ideal crt_ideal(const NumberField& K, const std::vector<CrtTarget>& data);

/// Up to `count` solutions of the congruences that are negative exactly at
/// the real places in `negatives`, nearest to the reduced crt solution first.
/// Degree at most 2.
std::vector<FieldElt> signed_crt_candidates(const NumberField& K, const std::vector<CrtTarget>& data,
                                            const std::vector<int>& negatives, std::size_t count);

/// Omega-coordinate product in O_K.
std::vector<Int> omega_mul(const NumberField& K, const std::vector<Int>& x, const std::vector<Int>& y);
/// Norm of x0 + x1 omega (degree <= 2).
Int omega_norm(const NumberField& K, const std::vector<Int>& x);

} // namespace qf
