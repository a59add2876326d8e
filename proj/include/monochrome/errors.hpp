#pragma once

#include <stdexcept>
#include <string>

namespace monochrome {

enum class ErrorCode {
    InvalidArgument,
    OutOfRange,
    SelfLoop,
    DuplicateEdge,
    ParseError,
    InfeasibleSpec,
    GenerationTimeout,
    UnsupportedLength,
    PatternTooLarge,
    EnumerationGateExceeded,
    SizeGateExceeded,
    PreconditionViolated,
    SolutionMismatch,
    NoSpanningCycleEdgeFactor,
    ConvergenceFailure,
    BadColorVector,
    WrongLawKind,
    AmbiguousRegime,
    DomainExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Gate violations are the errors that mean "input too large for an exact
/// method"; the CLI maps them to their own exit status.
bool is_gate_error(ErrorCode code) noexcept;
bool is_numerical_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace monochrome
