#include "repkit/error.hpp"

namespace repkit {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorCode::IncompleteDecomposition: return "IncompleteDecomposition";
        case ErrorCode::BasisNotFinite: return "BasisNotFinite";
        case ErrorCode::InvalidRelation: return "InvalidRelation";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::NotIntertwiner: return "NotIntertwiner";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotExact: return "NotExact";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::IndexOrder: return "IndexOrder";
        case ErrorCode::NotAnExtension: return "NotAnExtension";
        case ErrorCode::HaradaSaiViolation: return "HaradaSaiViolation";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace repkit
