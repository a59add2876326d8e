#include "monochrome/errors.hpp"

namespace monochrome {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
        case ErrorCode::GenerationTimeout: return "GenerationTimeout";
        case ErrorCode::UnsupportedLength: return "UnsupportedLength";
        case ErrorCode::PatternTooLarge: return "PatternTooLarge";
        case ErrorCode::EnumerationGateExceeded: return "EnumerationGateExceeded";
        case ErrorCode::SizeGateExceeded: return "SizeGateExceeded";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::SolutionMismatch: return "SolutionMismatch";
        case ErrorCode::NoSpanningCycleEdgeFactor: return "NoSpanningCycleEdgeFactor";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::BadColorVector: return "BadColorVector";
        case ErrorCode::WrongLawKind: return "WrongLawKind";
        case ErrorCode::AmbiguousRegime: return "AmbiguousRegime";
        case ErrorCode::DomainExceeded: return "DomainExceeded";
    }
    return "Unknown";
}

bool is_gate_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::PatternTooLarge:
        case ErrorCode::EnumerationGateExceeded:
        case ErrorCode::SizeGateExceeded:
        case ErrorCode::GenerationTimeout:
            return true;
        default:
            return false;
    }
}

bool is_numerical_error(ErrorCode code) noexcept {
    return code == ErrorCode::ConvergenceFailure || code == ErrorCode::DomainExceeded;
}

}  // namespace monochrome
