#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsurf {

enum class ErrorCode {
    InvalidField,
    FieldMismatch,
    DivisionByZero,
    InvalidArgument,
    NotDivisible,
    SpecMismatch,
    InvalidSpec,
    IllegalExponent,
    VerificationFailed,
    NotApplicable,
    StepLimit,
    TrivialMap,
    InhomogeneousTarget,
    InvalidMu,
    NotEndomorphism,
    NotOfLemmaForm,
    NotInvertible,
    UnreducedSpec,
    IllegalParameters,
    SyntaxError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace dsurf
