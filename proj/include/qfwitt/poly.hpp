#pragma once

// Univariate rational polynomials, Sturm sequences and real root isolation.

#include "qfwitt/integer.hpp"

#include <vector>

namespace qf {

struct Interval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Dense polynomial, coefficients in increasing degree. The zero polynomial
/// has no coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly from_ints(const std::vector<Int>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { return c_.back(); }

    Rat operator()(const Rat& x) const;
    Interval eval(const Interval& x) const;
    QPoly derivative() const;

    friend QPoly operator-(const QPoly& a);
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    /// Euclidean remainder.
    friend QPoly operator%(const QPoly& a, const QPoly& b);
    friend QPoly operator/(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

private:
    void trim();
    std::vector<Rat> c_;
};

std::vector<QPoly> sturm_sequence(const QPoly& f);

/// Number of distinct real roots of f in the half-open interval (a, b].
int count_roots(const std::vector<QPoly>& sturm, const Rat& a, const Rat& b);

/// Disjoint rational isolating intervals (lo, hi) for the real roots of a
/// squarefree f, sorted left to right. Endpoints are never roots.
std::vector<Interval> isolate_real_roots(const QPoly& f);

/// Halve an isolating interval of a root of f, keeping the half with the root.
Interval bisect_root(const QPoly& f, const Interval& iv);

} // namespace qf
