#include "qfwitt/diagonal_form.hpp"

#include "qfwitt/error.hpp"

namespace qf {

DiagonalForm::DiagonalForm(const NumberField& K, std::vector<FieldElt> coeffs) : field_(&K), c_(std::move(coeffs))
{
    for (const auto& a : c_) {
        if (&a.field() != field_)
            throw Error(ErrorKind::FieldMismatch, "coefficient " + a.str() + " lives in another field");
        if (a.is_zero())
            throw Error(ErrorKind::DegenerateForm, "zero coefficient");
    }
}

DiagonalForm DiagonalForm::operator+(const DiagonalForm& o) const
{
    if (field_ != o.field_)
        throw Error(ErrorKind::FieldMismatch, "orthogonal sum over different fields");
    DiagonalForm out = *this;
    out.c_.insert(out.c_.end(), o.c_.begin(), o.c_.end());
    return out;
}

DiagonalForm DiagonalForm::with_hyperbolic(int k) const
{
    DiagonalForm out = *this;
    for (int i = 0; i < k; ++i) {
        out.c_.push_back(field_->one());
        out.c_.push_back(-field_->one());
    }
    return out;
}

DiagonalForm DiagonalForm::scaled(const FieldElt& c) const
{
    DiagonalForm out = *this;
    for (auto& a : out.c_)
        a *= c;
    return out;
}

std::string DiagonalForm::str() const
{
    std::string s = "<";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ", ";
        s += c_[i].str();
    }
    return s + ">";
}

} // namespace qf
