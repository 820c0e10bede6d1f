#pragma once

#include <stdexcept>
#include <string>

namespace qf {

enum class ErrorKind {
    InvalidField,
    ZeroDivision,
    ZeroSign,
    NotPrime,
    InfiniteValuation,
    DuplicateModulus,
    NegativeValuation,
    DegenerateForm,
    MissingPrimes,
    FieldMismatch,
    WrongAdim,
    LoopBudgetExceeded,
    Unsupported,
    FactorizationFailed,
    Parse,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::ZeroSign: return "ZeroSign";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InfiniteValuation: return "InfiniteValuation";
    case ErrorKind::DuplicateModulus: return "DuplicateModulus";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::MissingPrimes: return "MissingPrimes";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::WrongAdim: return "WrongAdim";
    case ErrorKind::LoopBudgetExceeded: return "LoopBudgetExceeded";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace qf
