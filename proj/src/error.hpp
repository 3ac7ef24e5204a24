#pragma once

#include <stdexcept>
#include <string>

namespace flagcodes {

enum class ErrorCode {
    CompositeCharacteristic,
    UnsupportedFieldSize,
    MixedFields,
    DivisionByZero,
    ShapeMismatch,
    Singular,
    AmbientMismatch,
    DimensionMismatch,
    NotNested,
    TypeMismatch,
    NotGenerating,
    TooLarge,
    Infeasible,
    ParseError,
    UnknownFixture,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace flagcodes
