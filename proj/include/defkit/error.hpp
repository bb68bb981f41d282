#pragma once

#include <stdexcept>
#include <string>

namespace defkit {

enum class ErrorKind {
    RingMismatch,
    IndexOutOfRange,
    SyntaxError,
    UnknownVariable,
    ZeroDenominator,
    NonIsolated,
    NotOnVariety,
    DegenerateInput,
    NotCompleteIntersection,
    CountMismatch,
    PositiveDimensional,
    NonReducedScheme,
    NonInvariantGenerator,
    IdentityElement,
    DivisibilityObstruction,
    ParameterViolation,
    SaturationDidNotStabilize,
    BudgetExceeded,
    RetriesExhausted,
    InfiniteColength,
    Unsupported,
};

/// Domain error carrying a machine-readable kind next to the human message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
            case ErrorKind::RingMismatch: return "ring-mismatch";
            case ErrorKind::IndexOutOfRange: return "index-out-of-range";
            case ErrorKind::SyntaxError: return "syntax-error";
            case ErrorKind::UnknownVariable: return "unknown-variable";
            case ErrorKind::ZeroDenominator: return "zero-denominator";
            case ErrorKind::NonIsolated: return "non-isolated";
            case ErrorKind::NotOnVariety: return "not-on-variety";
            case ErrorKind::DegenerateInput: return "degenerate-input";
            case ErrorKind::NotCompleteIntersection: return "not-complete-intersection";
            case ErrorKind::CountMismatch: return "count-mismatch";
            case ErrorKind::PositiveDimensional: return "positive-dimensional";
            case ErrorKind::NonReducedScheme: return "non-reduced-scheme";
            case ErrorKind::NonInvariantGenerator: return "non-invariant-generator";
            case ErrorKind::IdentityElement: return "identity-element";
            case ErrorKind::DivisibilityObstruction: return "divisibility-obstruction";
            case ErrorKind::ParameterViolation: return "parameter-violation";
            case ErrorKind::SaturationDidNotStabilize: return "saturation-did-not-stabilize";
            case ErrorKind::BudgetExceeded: return "budget-exceeded";
            case ErrorKind::RetriesExhausted: return "retries-exhausted";
            case ErrorKind::InfiniteColength: return "infinite-colength";
            case ErrorKind::Unsupported: return "unsupported";
        }
        return "unknown";
    }

private:
    ErrorKind kind_;
};

} // namespace defkit
