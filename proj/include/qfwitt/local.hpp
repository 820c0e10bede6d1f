#pragma once

// Completions of K: square classes, Hilbert symbols, Hasse invariants and
// anisotropic dimension over K_v.

#include "qfwitt/diagonal_form.hpp"
#include "qfwitt/ideals.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qf {

struct Place {
    enum class Kind { Real, Complex, Finite };

    Kind kind = Kind::Finite;
    int index = 0; // real places
    PrimeIdeal prime;

    static Place real(int i) { return {Kind::Real, i, {}}; }
    static Place complex() { return {Kind::Complex, 0, {}}; }
    static Place finite(const PrimeIdeal& P) { return {Kind::Finite, 0, P}; }

    std::string str() const;
};

using F2Vec = std::vector<std::uint8_t>;

/// K_P^* / K_P^*2 as an F2 vector space with its Hilbert pairing. Coordinate
/// 0 is the parity of the valuation; the rest describe the unit part.
class SquareClassSpace {
public:
    /// Cached per prime.
    static const SquareClassSpace& at(const PrimeIdeal& P);

    const PrimeIdeal& prime() const { return P_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    F2Vec coords(const FieldElt& x) const;
    /// Bit of the Hilbert symbol: 1 means -1.
    int pairing(const F2Vec& a, const F2Vec& b) const;
    /// Representatives of the basis classes; entry 0 is the uniformizer.
    const std::vector<FieldElt>& basis() const { return basis_; }
    /// A unit that is not a local square; the smallest non-residue lift for
    /// odd primes.
    const FieldElt& nonsquare_unit() const { return u_; }

    explicit SquareClassSpace(const PrimeIdeal& P);

private:
    void build_nondyadic();
    void build_dyadic();
    int unit_character(const FieldElt& unit) const;
    const std::vector<std::vector<std::uint8_t>>& symbol_matrix() const;

    PrimeIdeal P_;
    std::vector<FieldElt> basis_;
    // Symbols of basis pairs; filled on first use for dyadic primes.
    mutable std::vector<std::vector<std::uint8_t>> M_;
    mutable std::once_flag M_once_;
    FieldElt u_;
    // dyadic data
    int unit_precision_ = 0;
    std::unique_ptr<LocalRing> ring_;
    std::vector<F2Vec> unit_table_; // indexed by ring index; empty vector for non-units
};

/// Hilbert symbol (a, b)_P for basis-sized elements, by a Hensel-certified
/// search for primitive solutions of z^2 = a x^2 + b y^2 modulo P^N.
int hilbert_by_search(const FieldElt& a, const FieldElt& b, const PrimeIdeal& P);

bool is_local_square(const FieldElt& x, const PrimeIdeal& P);
F2Vec square_class(const FieldElt& x, const Place& v);
int pairing(const F2Vec& a, const F2Vec& b, const Place& v);

/// +1 or -1.
int hilbert(const FieldElt& a, const FieldElt& b, const Place& v);
int hilbert(const FieldElt& a, const FieldElt& b, const PrimeIdeal& P);

int hasse(const DiagonalForm& q, const Place& v);

/// Anisotropic dimension of q over K_v.
int local_adim(const DiagonalForm& q, const Place& v);

/// Non-dyadic representative among 1, u, pi, u*pi of the class of x.
FieldElt square_class_rep(const FieldElt& x, const PrimeIdeal& P);

/// The places where Hilbert symbols or adim can be nontrivial, in a fixed
/// order: real places, one complex place if any, then finite primes.
std::vector<Place> infinite_places(const NumberField& K);

} // namespace qf
