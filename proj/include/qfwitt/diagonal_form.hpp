#pragma once

#include "qfwitt/field.hpp"

#include <string>
#include <vector>

namespace qf {

/// <a_1, ..., a_n> over a number field; coefficients are nonzero.
class DiagonalForm {
public:
    explicit DiagonalForm(const NumberField& K) : field_(&K) {}
    /// Throws DegenerateForm on a zero coefficient.
    DiagonalForm(const NumberField& K, std::vector<FieldElt> coeffs);

    const NumberField& field() const { return *field_; }
    const std::vector<FieldElt>& coeffs() const { return c_; }
    const FieldElt& operator[](std::size_t i) const { return c_[i]; }
    int dim() const { return static_cast<int>(c_.size()); }

    /// Orthogonal sum.
    DiagonalForm operator+(const DiagonalForm& o) const;
    /// Append k hyperbolic planes <1, -1>.
    DiagonalForm with_hyperbolic(int k) const;
    DiagonalForm scaled(const FieldElt& c) const;

    std::string str() const;

private:
    const NumberField* field_;
    std::vector<FieldElt> c_;
};

} // namespace qf
