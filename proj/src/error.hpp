#pragma once

#include <stdexcept>
#include <string>

namespace ffgroup {

enum class Errc {
    NonPrimeCharacteristic,
    NotPrimePower,
    BudgetExceeded,
    ScanTooLarge,
    DivisionByZero,
    ZeroElement,
    MixedFields,
    InvalidSubfield,
    ConstantPolynomial,
    NotMonic,
    ZeroConstantTerm,
    ZeroPolynomial,
    DegreeZero,
    SingularMatrix,
    DimensionMismatch,
    FrameMismatch,
    EmptyGeneratorList,
    ParseError,
    InvalidArgument,
};

const char* errc_name(Errc c);

/// Library error: a code from the fixed list above plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::NotPrimePower: return "NotPrimePower";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ScanTooLarge: return "ScanTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::MixedFields: return "MixedFields";
        case Errc::InvalidSubfield: return "InvalidSubfield";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::FrameMismatch: return "FrameMismatch";
        case Errc::EmptyGeneratorList: return "EmptyGeneratorList";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace ffgroup
