#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aflt {

enum class ErrorKind {
    ParseError,
    UnsupportedField,
    WrongFamily,
    DivisionByZero,
    ValuationOfZero,
    TrivialSolution,
    PreconditionViolation,
    UnsupportedExponent,
    DegenerateLambda,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code used by the CLI for an error of this kind:
/// 2 = input/parse error, 3 = unsupported field, 4 = precondition violation.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string & what)
{
    throw Error(kind, what);
}

}  // namespace aflt
