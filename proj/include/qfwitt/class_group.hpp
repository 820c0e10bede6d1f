#pragma once

// Class groups of quadratic fields, principal ideal tests, S-units modulo
// squares and a basis of S-singular elements modulo squares.

#include "qfwitt/abelian.hpp"
#include "qfwitt/ideals.hpp"

#include <optional>
#include <vector>

namespace qf {

struct AbelianGroupPresentation {
    std::vector<PrimeIdeal> generators;
    IntMatrix relations; // rows are exponent vectors over the generators
    std::vector<Int> elementary_divisors; // nontrivial ones only

    Int order() const;
    int two_rank() const;
};

/// The class group with a certified presentation over the primes of norm at
/// most the Minkowski bound. Cached per field.
class ClassGroup {
public:
    static const ClassGroup& of(const NumberField& K);

    const NumberField& field() const { return *field_; }
    const AbelianGroupPresentation& presentation() const { return pres_; }
    const std::vector<Int>& invariants() const { return pres_.elementary_divisors; }
    Int order() const { return pres_.order(); }

    /// Coordinates in (+) Z/invariants[i].
    std::vector<Int> log(const PrimeIdeal& P) const;
    std::vector<Int> log(const std::vector<std::pair<PrimeIdeal, int>>& factors) const;
    std::vector<Int> reduce(std::vector<Int> g) const;
    std::vector<std::vector<Int>> elements() const;
    /// An integral ideal in the class g.
    Ideal representative(const std::vector<Int>& g) const;

    explicit ClassGroup(const NumberField& K);

private:
    std::vector<Int> log_of_factor_base(std::size_t i) const;

    const NumberField* field_;
    AbelianGroupPresentation pres_;
    std::vector<std::size_t> kept_;   // SNF positions with invariant > 1
    IntMatrix V_, Vinv_;
    mutable std::vector<std::pair<PrimeIdeal, std::vector<Int>>> log_cache_;
};

AbelianGroupPresentation class_group(const NumberField& K);
/// Class group modulo the classes of the primes in S.
AbelianGroupPresentation s_class_group(const NumberField& K, const std::vector<PrimeIdeal>& S);

/// A generator of I when I is principal.
std::optional<FieldElt> is_principal(const Ideal& I);

/// Generator of prod P^e; throws Internal when the product is not principal.
FieldElt generator_of(const NumberField& K, const std::vector<std::pair<PrimeIdeal, int>>& factors);

/// An integral element of the same square class as x with the square part
/// of its ideal divided out and, for real fields, balanced embeddings.
FieldElt small_square_class_rep(const FieldElt& x);

/// The fundamental unit of a real quadratic field, > 1 where t = +sqrt(d),
/// from the continued fraction of omega.
FieldElt fundamental_unit(const NumberField& K);

/// F2-basis of the S-units modulo squares: torsion, the fundamental unit for
/// real fields, and generators of a basis of principal S-ideals.
std::vector<FieldElt> s_units_mod_squares(const NumberField& K, const std::vector<PrimeIdeal>& S);

struct SingularBasis {
    const NumberField* field = nullptr;
    std::vector<PrimeIdeal> S;
    std::vector<FieldElt> basis;
    int unit_part_size = 0;
    int class_part_size = 0;
    /// Primes outside S whose classes span the 2-torsion of the S-class group.
    std::vector<PrimeIdeal> class_primes;
};

/// F2-basis of elements with even valuation outside S, modulo squares.
SingularBasis singular_group_basis(const NumberField& K, const std::vector<PrimeIdeal>& S);

} // namespace qf
