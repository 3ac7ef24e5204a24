#include "error.hpp"

namespace flagcodes {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace flagcodes
