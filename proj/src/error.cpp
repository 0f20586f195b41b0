#include "twostruct/error.hpp"

namespace twostruct {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownColor: return "UnknownColor";
        case ErrorKind::UnusedColor: return "UnusedColor";
        case ErrorKind::BadPartnerInvolution: return "BadPartnerInvolution";
        case ErrorKind::BadColorName: return "BadColorName";
        case ErrorKind::StarViolation: return "StarViolation";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotATournament: return "NotATournament";
        case ErrorKind::VertexSetMismatch: return "VertexSetMismatch";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::NotAFactorization: return "NotAFactorization";
        case ErrorKind::NotReversible: return "NotReversible";
        case ErrorKind::InternalMismatch: return "InternalMismatch";
        case ErrorKind::NotAnExtension: return "NotAnExtension";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::NotEComplete: return "NotEComplete";
        case ErrorKind::TooFewColors: return "TooFewColors";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::PowerMismatch: return "PowerMismatch";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::NotFaithful: return "NotFaithful";
        case ErrorKind::InternalProofViolation: return "InternalProofViolation";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace twostruct
