#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace repkit {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    UnsupportedField,
    ShapeMismatch,
    Singular,
    InvalidArgument,
    ParseError,
    UnsupportedCharacteristic,
    IncompleteDecomposition,
    BasisNotFinite,
    InvalidRelation,
    AlgebraMismatch,
    NotIntertwiner,
    PreconditionViolated,
    NotExact,
    DimensionMismatch,
    DenominatorVanishes,
    IndexOrder,
    NotAnExtension,
    HaradaSaiViolation,
    IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code and key/value context.
class Error : public std::runtime_error {
   public:
    using Context = std::vector<std::pair<std::string, std::string>>;

    Error(ErrorCode code, const std::string& message, Context context = {})
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    ErrorCode code() const noexcept { return code_; }
    const Context& context() const noexcept { return context_; }

   private:
    ErrorCode code_;
    Context context_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, Error::Context context = {}) {
    throw Error(code, message, std::move(context));
}

}  // namespace repkit
