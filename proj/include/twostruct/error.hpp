#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twostruct {

enum class ErrorKind {
    UnknownColor,
    UnusedColor,
    BadPartnerInvolution,
    BadColorName,
    StarViolation,
    OutOfRange,
    NotATournament,
    VertexSetMismatch,
    EmptySet,
    TooLarge,
    TooSmall,
    NotAFactorization,
    NotReversible,
    InternalMismatch,
    NotAnExtension,
    NotPrimitive,
    NotEComplete,
    TooFewColors,
    PreconditionFailed,
    PowerMismatch,
    NotComplete,
    NotFaithful,
    InternalProofViolation,
    BudgetExceeded,
    ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised by the text readers; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace twostruct
