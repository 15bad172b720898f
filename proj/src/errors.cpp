#include "aflt/errors.hpp"

namespace aflt {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ValuationOfZero: return "ValuationOfZero";
    case ErrorKind::TrivialSolution: return "TrivialSolution";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorKind::DegenerateLambda: return "DegenerateLambda";
    }
    return "Error";
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::UnsupportedField: return 3;
    default: return 4;
    }
}

}  // namespace aflt
