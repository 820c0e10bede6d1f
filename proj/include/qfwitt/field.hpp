#pragma once

// Exact arithmetic in K = Q(theta) with [K:Q] in {1, 2}, plus one fixed totally
// real cubic used for sign tests.
//
// Fields are interned: make_field() returns a reference that lives for the
// whole process, so elements can hold a plain pointer to their field.

#include "qfwitt/integer.hpp"
#include "qfwitt/poly.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

class FieldElt;

/// A real embedding, identified by the isolating interval of theta's image.
struct RealPlace {
    int index = 0;
    Interval isolating_interval;

    Rat precision() const { return isolating_interval.width(); }
};

class NumberField {
public:
    enum class Kind { Rational, Quadratic, Cubic };

    Kind kind() const { return kind_; }
    int degree() const { return degree_; }
    /// d for Q(sqrt(d)); 1 for Q and 0 for the cubic.
    long radicand() const { return d_; }
    /// Monic integer defining polynomial of theta, increasing degree.
    const std::vector<Int>& def_poly() const { return f_; }
    const QPoly& def_qpoly() const { return fq_; }
    /// Monic integer minimal polynomial of the integral generator omega,
    /// with O_K = Z[omega].
    const std::vector<Int>& omega_poly() const { return g_; }
    const Int& disc() const { return disc_; }
    const std::string& name() const { return name_; }

    int num_real_places() const { return static_cast<int>(real_.size()); }
    int num_complex_places() const { return (degree_ - num_real_places()) / 2; }
    bool is_real() const { return num_real_places() > 0; }
    /// Snapshot of the current isolating interval.
    RealPlace real_place(int i) const;
    /// Shrink the interval of place i at least once and return the new one.
    RealPlace refine(int i) const;

    /// Coordinates of x in the integral basis {1, omega, omega^2, ...}.
    std::vector<Rat> to_omega(const FieldElt& x) const;
    FieldElt from_omega(const std::vector<Rat>& coords) const;
    FieldElt from_omega(const std::vector<Int>& coords) const;
    FieldElt omega() const;
    FieldElt theta() const;
    FieldElt one() const;
    FieldElt from_int(const Int& n) const;
    FieldElt from_rat(const Rat& n) const;

    NumberField(const NumberField&) = delete;
    NumberField& operator=(const NumberField&) = delete;

private:
    friend const NumberField& rationals();
    friend const NumberField& quadratic_field(long d);
    friend const NumberField& simplest_cubic();
    NumberField(Kind kind, long d);

    Kind kind_;
    int degree_;
    long d_;
    std::vector<Int> f_;
    QPoly fq_;
    std::vector<Int> g_;
    Int disc_;
    std::string name_;
    bool omega_shifted_ = false; // omega = (1 + theta) / 2

    mutable std::mutex real_mutex_;
    mutable std::vector<Interval> real_;
};

const NumberField& rationals();
/// Q(sqrt(d)); d must be squarefree and not 0 or 1.
const NumberField& quadratic_field(long d);
/// Q(theta) with theta^3 - 3 theta - 1 = 0 (three real places).
const NumberField& simplest_cubic();
/// Accepts "Q", "Q(sqrt(d))", "Q(sqrt d)" and "Q[x]/(x^3-3*x-1)".
const NumberField& make_field(std::string_view spec);

class FieldElt {
public:
    FieldElt() = default;
    FieldElt(const NumberField& field, std::vector<Rat> coeffs);

    const NumberField& field() const { return *field_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; requires is_rational().
    const Rat& rational() const { return c_[0]; }
    Rat norm() const;
    Rat trace() const;
    FieldElt inverse() const;
    /// Galois conjugate (quadratic fields); identity over Q.
    FieldElt conj() const;
    /// Least positive integer D with D * x integral in the power basis.
    Int denominator() const;

    std::string str() const;

    FieldElt& operator+=(const FieldElt& o);
    FieldElt& operator-=(const FieldElt& o);
    FieldElt& operator*=(const FieldElt& o);
    FieldElt& operator/=(const FieldElt& o);
    friend FieldElt operator+(FieldElt a, const FieldElt& b) { return a += b; }
    friend FieldElt operator-(FieldElt a, const FieldElt& b) { return a -= b; }
    friend FieldElt operator*(FieldElt a, const FieldElt& b) { return a *= b; }
    friend FieldElt operator/(FieldElt a, const FieldElt& b) { return a /= b; }
    friend FieldElt operator-(const FieldElt& a);
    friend FieldElt operator*(FieldElt a, const Rat& r);
    friend FieldElt operator*(const Rat& r, FieldElt a) { return a * r; }
    friend bool operator==(const FieldElt& a, const FieldElt& b);
    friend bool operator!=(const FieldElt& a, const FieldElt& b) { return !(a == b); }

private:
    void check_same_field(const FieldElt& o) const;

    const NumberField* field_ = nullptr;
    std::vector<Rat> c_;
};

enum class ArithOp { Add, Sub, Mul, Div };
FieldElt arith(const FieldElt& x, const FieldElt& y, ArithOp op);

FieldElt pow(const FieldElt& x, long e);

/// Parse an element written as a rational-coefficient polynomial in `t`.
FieldElt parse_element(const NumberField& field, std::string_view text);

/// Exact sign of x under the i-th real embedding.
int sign_at(const FieldElt& x, int place);
std::vector<int> signs(const FieldElt& x);
/// Rational enclosure of the i-th real embedding of x.
Interval embed(const FieldElt& x, int place, const Rat& max_width);

/// A square root of x in K when one exists (degrees 1 and 2).
std::optional<FieldElt> is_global_square(const FieldElt& x);

/// Same square class as x, with rational square factors removed from the
/// numerator content and the denominator cleared.
FieldElt square_reduce(const FieldElt& x);

} // namespace qf
